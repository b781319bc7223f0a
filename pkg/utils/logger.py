"""Process-wide logger writing to stderr."""

import logging
import sys
from typing import Any

from env import settings


class Logger:
    _logger: logging.Logger | None = None

    @classmethod
    def _create_logger(cls) -> logging.Logger:
        logger = logging.getLogger("pam_subgraphs")
        if logger.hasHandlers():
            logger.handlers.clear()
        logger.propagate = False
        logger.setLevel(getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO))

        # stdout is reserved for emitted results
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(
            logging.Formatter("%(asctime)s | %(levelname)s | %(message)s", datefmt="%Y-%m-%d %H:%M:%S")
        )
        logger.addHandler(handler)
        return logger

    @classmethod
    def get_logger(cls) -> logging.Logger:
        if cls._logger is None:
            cls._logger = cls._create_logger()
        return cls._logger

    @classmethod
    def warn(cls, message: str, *args: Any) -> None:
        cls.get_logger().warning(message, *args)

    @classmethod
    def error(cls, message: str, *args: Any) -> None:
        cls.get_logger().error(message, *args)

    @classmethod
    def debug(cls, message: str, *args: Any) -> None:
        cls.get_logger().debug(message, *args)

    @classmethod
    def stage(cls, component: str, stage: str, **fields: Any) -> None:
        """Log one pipeline step as ``component | stage | key=value ...``."""
        message = f"{component} | {stage}"
        if fields:
            rendered = " ".join(f"{key}={value}" for key, value in fields.items())
            message = f"{message} | {rendered}"
        cls.get_logger().info(message)
