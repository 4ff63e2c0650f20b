import os
import logging
from dataclasses import dataclass, field


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        logging.getLogger(__name__).warning(
            f"Ignoring {name}={value!r}: not an integer, using {default}"
        )
        return default


@dataclass
class ClusterConfig:
    """
    Configures the matching engine, sequence checks and suite runner
    """

    max_vertices: int = field(
        default_factory=lambda: _env_int("CLUSTER_MATCH_MAX_VERTICES", 512)
    )
    """
    Bitset width of the matching engine; larger graphs are rejected
    """

    enumeration_limit: int = field(
        default_factory=lambda: _env_int("CLUSTER_MATCH_ENUM_LIMIT", 100000)
    )
    """
    Default cap on the number of matchings the exhaustive oracle may list
    """

    period_window: int = field(
        default_factory=lambda: _env_int("CLUSTER_MATCH_PERIOD_WINDOW", 12)
    )
    """
    Number of consecutive indices compared when confirming a period
    """

    suite_workers: int = field(
        default_factory=lambda: _env_int("CLUSTER_MATCH_WORKERS", 1)
    )
    """
    Threads used by the full identity suite
    """

    logger: logging.Logger = logging.getLogger("cluster_match")
    """
    Python logger
    """

    def configure_logging(self, *args, **kw):
        """
        Configure logging using logging.basicConfig
        """
        return logging.basicConfig(*args, **kw)

    def with_max_vertices(self, n: int):
        """
        Update the matching engine's vertex limit
        """
        self.max_vertices = n
        return self

    def with_workers(self, n: int):
        """
        Update the number of suite worker threads
        """
        self.suite_workers = max(1, n)
        return self


DEFAULT_CONFIG = ClusterConfig()
