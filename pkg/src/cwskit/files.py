"""Plain-text formats for graphs and codes.

Graph files: a header line `n <count>`, then one `a b` line per edge
with 1-based labels and a < b.  Code files: a `graph <ref>` line naming
the underlying graph, then one codeword line each, comma-separated
labels with `-` standing for the empty word.  The graph reference is a
path relative to the code file, or `builtin:loop<k>` for a loop without
a separate file.

Blank lines and `#` comments are skipped everywhere.  All structural
complaints carry the file and line they point at.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .cwscode import CwsCode
from .graphstate import Graph, loop_graph

_BUILTIN_PREFIX = "builtin:loop"


class FileFormatError(ValueError):
    def __init__(self, path: str | Path, line: int, message: str) -> None:
        super().__init__(f"{path}:{line}: {message}")
        self.path = str(path)
        self.line = line
        self.message = message


def _meaningful_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def load_graph(path: str | Path) -> Graph:
    path = Path(path)
    lines = list(_meaningful_lines(path.read_text()))
    if not lines:
        raise FileFormatError(path, 1, "empty graph file")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise FileFormatError(path, number, f"expected header 'n <count>', got {header!r}")
    n = int(parts[1])
    edges = []
    seen: set[tuple[int, int]] = set()
    for number, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FileFormatError(path, number, f"expected edge 'a b', got {line!r}")
        a, b = int(parts[0]), int(parts[1])
        if a == b:
            raise FileFormatError(path, number, f"self-loop {a} {b}")
        if not (1 <= a < b <= n):
            raise FileFormatError(path, number, f"edge {a} {b} must satisfy 1 <= a < b <= {n}")
        if (a, b) in seen:
            raise FileFormatError(path, number, f"duplicate edge {a} {b}")
        seen.add((a, b))
        edges.append((a, b))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FileFormatError(path, lines[0][0], str(exc)) from exc


def render_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{a} {b}" for a, b in g.edges())
    return "\n".join(lines) + "\n"


def resolve_graph_reference(ref: str, base: Path) -> tuple[str, Graph]:
    """Turn a code file's graph line into (kind, graph).

    kind is the builtin name `loop<k>` or the resolved file path.
    """
    if ref.startswith(_BUILTIN_PREFIX):
        suffix = ref[len(_BUILTIN_PREFIX):]
        if not suffix.isdigit():
            raise ValueError(f"bad builtin graph reference {ref!r}")
        return ref[len("builtin:"):], loop_graph(int(suffix))
    target = (base / ref).resolve() if not Path(ref).is_absolute() else Path(ref)
    return str(target), load_graph(target)


def _parse_codeword_line(path: Path, number: int, line: str, n: int) -> frozenset[int]:
    if line == "-":
        return frozenset()
    vertices = []
    for token in line.split(","):
        token = token.strip()
        if not token.isdigit():
            raise FileFormatError(path, number, f"bad codeword entry {token!r}")
        v = int(token)
        if not 1 <= v <= n:
            raise FileFormatError(path, number, f"vertex {v} outside 1..{n}")
        vertices.append(v)
    word = frozenset(vertices)
    if len(word) != len(vertices):
        raise FileFormatError(path, number, f"repeated vertex in codeword {line!r}")
    return word


def load_code(path: str | Path) -> CwsCode:
    path = Path(path)
    lines = list(_meaningful_lines(path.read_text()))
    if not lines:
        raise FileFormatError(path, 1, "empty code file")
    number, header = lines[0]
    if not header.startswith("graph ") or len(header.split()) != 2:
        raise FileFormatError(path, number, f"expected 'graph <ref>', got {header!r}")
    try:
        _, graph = resolve_graph_reference(header.split()[1], path.parent)
    except (OSError, ValueError) as exc:
        if isinstance(exc, FileFormatError):
            raise
        raise FileFormatError(path, number, str(exc)) from exc
    codewords = []
    seen: dict[frozenset[int], int] = {}
    for number, line in lines[1:]:
        word = _parse_codeword_line(path, number, line, graph.n)
        if word in seen:
            shown = ",".join(map(str, sorted(word))) or "-"
            raise FileFormatError(
                path, number, f"duplicate codeword {shown} (first on line {seen[word]})")
        seen[word] = number
        codewords.append(word)
    if not codewords:
        raise FileFormatError(path, lines[0][0], "no codeword lines")
    return CwsCode(graph, tuple(codewords))


def render_code(code: CwsCode, graph_ref: str) -> str:
    lines = [f"graph {graph_ref}"]
    for word in code.codewords:
        lines.append(",".join(map(str, sorted(word))) if word else "-")
    return "\n".join(lines) + "\n"
