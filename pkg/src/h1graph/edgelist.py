"""The repo's canonical edge-list text format.

First non-comment line is ``n m``, followed by m lines ``u v``.  Lines
starting with ``#`` (and blank lines) are ignored.  Self-loops and duplicate
pairs are tolerated on read and normalized away; they are never written.
"""

from __future__ import annotations

from .errors import GraphParseError, InputDomainError
from .graph import Graph, from_edge_list


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Raises GraphParseError naming the 1-based line of the first problem.
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    declared_m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphParseError(lineno, f"expected header 'n m', got {line!r}")
            try:
                n, declared_m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphParseError(lineno, f"non-integer header field in {line!r}") from None
            if n < 0 or declared_m < 0:
                raise GraphParseError(lineno, "header counts must be non-negative")
            header = (n, declared_m)
            continue
        if len(pairs) >= declared_m:
            raise GraphParseError(lineno, f"more than the declared {declared_m} edge lines")
        if len(fields) != 2:
            raise GraphParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(lineno, f"non-integer vertex id in {line!r}") from None
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise GraphParseError(lineno, f"vertex pair ({u}, {v}) out of range for n={header[0]}")
        pairs.append((u, v))
    if header is None:
        raise GraphParseError(1, "empty input: missing 'n m' header")
    if len(pairs) != declared_m:
        raise GraphParseError(
            len(text.splitlines()) or 1,
            f"declared {declared_m} edges but found {len(pairs)}",
        )
    return from_edge_list(header[0], pairs)


def format_edge_list(g: Graph) -> str:
    """Render a Graph in the canonical format (edges sorted, u < v)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_file(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputDomainError(f"cannot read graph file {path}: {exc}") from exc
    return parse_edge_list(text)


def write_file(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_edge_list(g))
