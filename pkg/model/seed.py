"""Reproducible random streams."""

from typing import Annotated

import numpy as np
from pydantic import Field
from pydantic.dataclasses import dataclass

_UINT64 = Field(ge=0, lt=2**64)


@dataclass(frozen=True)
class Seed:
    """Root seed ``value`` plus a ``stream`` id selecting an independent substream.

    ``parent`` holds the streams of the seeds this one was derived from. The
    spawn key of the numpy ``SeedSequence`` feeding a PCG64 bit generator is
    ``parent + (stream,)``, so identical seeds give bit-identical draws on
    every platform numpy supports.
    """

    value: Annotated[int, _UINT64]
    stream: Annotated[int, _UINT64] = 0
    parent: tuple[Annotated[int, _UINT64], ...] = ()

    def spawn_key(self) -> tuple[int, ...]:
        return (*self.parent, self.stream)

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(entropy=self.value, spawn_key=self.spawn_key())
        return np.random.Generator(np.random.PCG64(sequence))

    def replica(self, index: int) -> "Seed":
        """Seed of the ``index``-th replica under this seed's own stream."""
        return Seed(value=self.value, stream=index, parent=self.spawn_key())
