"""Weighted index samplers used by the sequential generator.

Both samplers hold non-negative weights for indices ``1..size`` and map a
point ``u`` in ``[0, total)`` to the index whose cumulative interval contains
it. ``FenwickSampler`` does this in O(log size); ``LinearSampler`` is the
direct scan kept as an oracle.
"""

from typing import Protocol


class WeightSampler(Protocol):
    total: float

    def add(self, index: int, amount: float) -> None: ...

    def locate(self, u: float) -> int: ...


class FenwickSampler:
    def __init__(self, size: int) -> None:
        self.size = size
        self.total = 0.0
        self._tree = [0.0] * (size + 1)
        self._top = 1 << (size.bit_length() - 1) if size > 0 else 0

    def add(self, index: int, amount: float) -> None:
        self.total += amount
        tree = self._tree
        while index <= self.size:
            tree[index] += amount
            index += index & -index

    def locate(self, u: float) -> int:
        tree = self._tree
        position = 0
        remaining = u
        step = self._top
        while step:
            candidate = position + step
            if candidate <= self.size and tree[candidate] <= remaining:
                position = candidate
                remaining -= tree[candidate]
            step >>= 1
        return position + 1


class LinearSampler:
    def __init__(self, size: int) -> None:
        self.size = size
        self.total = 0.0
        self._weights = [0.0] * (size + 1)

    def add(self, index: int, amount: float) -> None:
        self.total += amount
        self._weights[index] += amount

    def locate(self, u: float) -> int:
        cumulative = 0.0
        for index in range(1, self.size + 1):
            cumulative += self._weights[index]
            if u < cumulative:
                return index
        return self.size


SAMPLERS: dict[str, type] = {
    "fenwick": FenwickSampler,
    "linear": LinearSampler,
}
