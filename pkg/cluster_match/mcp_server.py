from __future__ import annotations

from typing import List

from mcp.server.fastmcp import FastMCP

from .cli import matchpoly_payload, sequence_payload, xn_payload
from .config import DEFAULT_CONFIG, ClusterConfig
from .types import CaseParams, Interval
from .verifier import verify_identity


def create_server(config: ClusterConfig | None = None) -> FastMCP:
    """
    Build a FastMCP server exposing the library as tools.

    Tool results are the same JSON payloads the CLI prints with --json.
    """
    config = config or DEFAULT_CONFIG
    server = FastMCP("cluster-match")

    @server.tool()
    def xn(b: int, c: int, n: int) -> dict:
        """x_n for the pair (b, c) as numerator over a monomial denominator"""
        return xn_payload(b, c, n, config)

    @server.tool()
    def sequence(b: int, c: int, start: int, stop: int) -> List[dict]:
        """x_n and x_n(1,1) for every n in [start, stop]"""
        return sequence_payload(b, c, start, stop, config)

    @server.tool()
    def matchpoly(family: str, n: int, tilde: bool = False) -> dict:
        """Perfect-matching polynomial of the graph G_n of family 22, 14 or 41"""
        return matchpoly_payload(family, n, tilde, config)

    @server.tool()
    def verify(identity: str, start: int, stop: int, b: int = 1, c: int = 4) -> dict:
        """Check one identity exactly over [start, stop]"""
        report = verify_identity(identity, Interval(start, stop), CaseParams(b, c), config)
        return report.to_dict()

    return server


def serve(config: ClusterConfig | None = None):
    config = config or DEFAULT_CONFIG
    config.logger.info("serving cluster-match tools over stdio")
    create_server(config).run("stdio")
