"""Text formats for graphs, digraphs, rotation systems and construction scripts.

Every parser reports malformed input with the 1-based line number.  Blank
lines and lines starting with ``#`` are ignored everywhere.

* edge list (simple graph): ``u v`` per line, ``u u`` declares a loop,
  a single token ``v`` declares an isolated vertex
* multigraph edge list: same syntax, repeated lines mean parallel edges
* arc list (2-in 2-out digraph): ``u -> v`` per line, repeats allowed
* rotation system: ``v: e1 e2 e3`` per vertex, edge ids appearing twice
  overall (twice in one line means a loop at that vertex)
* series-parallel script: ``digon`` then ``series <edge>`` / ``parallel <edge>``
* distance-hereditary script: ``root a`` then ``pendant b on a`` /
  ``truetwin c of b`` / ``falsetwin c of b``
* chord word: whitespace-separated labels on one line
"""

from __future__ import annotations

from .chords import ChordDiagram
from .dh import DHSequence
from .euler import EulerDigraph
from .graphs import Graph
from .planar import PlaneMultigraph, SPSequence


class FormatError(ValueError):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _content_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


# -- graphs -----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Simple graph: no parallel edges (repeated pairs are collapsed)."""
    edges = []
    vertices = []
    for i, line in _content_lines(text):
        parts = line.split()
        if len(parts) == 1:
            vertices.append(parts[0])
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
        else:
            raise FormatError(f"expected 'u v' or a single vertex, got {line!r}", i)
    return Graph.from_edges(edges, vertices)


def format_edge_list(g: Graph) -> str:
    lines = []
    covered = set()
    for u, v in g.edges():
        lines.append(f"{u} {v}")
        covered.add(u)
        covered.add(v)
    for v in g.ids:
        if v not in covered:
            lines.append(v)
    return "\n".join(lines) + "\n" if lines else ""


def parse_multigraph_edges(text: str) -> list[tuple[str, str]]:
    """Multigraph edge list: repeated lines are parallel edges, 'u u' a loop."""
    edges = []
    for i, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", i)
        edges.append((parts[0], parts[1]))
    if not edges:
        raise FormatError("no edges in multigraph input")
    return edges


# -- digraphs ----------------------------------------------------------------


def parse_arc_list(text: str) -> EulerDigraph:
    pairs = []
    for i, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 3 or parts[1] != "->":
            raise FormatError(f"expected 'u -> v', got {line!r}", i)
        pairs.append((parts[0], parts[2]))
    try:
        return EulerDigraph.from_pairs(pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_arc_list(g: EulerDigraph) -> str:
    return "\n".join(f"{t} -> {h}" for _, t, h in g.arcs) + "\n" if g.arcs else ""


# -- rotation systems ----------------------------------------------------------


def parse_rotation_system(text: str) -> PlaneMultigraph:
    rotations: dict[str, list[str]] = {}
    order: list[str] = []
    for i, line in _content_lines(text):
        if ":" not in line:
            raise FormatError(f"expected 'v: e1 e2 ...', got {line!r}", i)
        v, rest = line.split(":", 1)
        v = v.strip()
        if not v:
            raise FormatError("empty vertex name", i)
        if v in rotations:
            raise FormatError(f"vertex {v!r} listed twice", i)
        rotations[v] = rest.split()
        order.append(v)
    occurrences: dict[str, list[str]] = {}
    for v in order:
        for e in rotations[v]:
            occurrences.setdefault(e, []).append(v)
    edges = {}
    for e, vs in occurrences.items():
        if len(vs) != 2:
            raise FormatError(f"edge {e!r} has {len(vs)} end(s), expected 2")
        edges[e] = (vs[0], vs[1])
    rotation_darts = {}
    used: dict[str, int] = {}
    for v in order:
        darts = []
        for e in rotations[v]:
            side = used.get(e, 0)
            used[e] = side + 1
            u0, u1 = edges[e]
            # a loop uses sides in listed order; a plain edge uses its own side
            darts.append((e, side if u0 == u1 else (0 if v == u0 else 1)))
        rotation_darts[v] = tuple(darts)
    try:
        return PlaneMultigraph(order, edges, rotation_darts)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_rotation_system(g: PlaneMultigraph) -> str:
    lines = []
    for v in g.vertex_ids:
        lines.append(f"{v}: " + " ".join(e for e, _ in g.rotation[v]))
    return "\n".join(lines) + "\n"


# -- construction scripts ---------------------------------------------------------


def parse_sp_sequence(text: str) -> SPSequence:
    ops: list[tuple] = []
    for i, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "digon" and len(parts) == 1:
            ops.append(("digon",))
        elif parts[0] in ("series", "parallel") and len(parts) == 2:
            ops.append((parts[0], parts[1]))
        else:
            raise FormatError(f"expected 'digon', 'series <edge>' or "
                              f"'parallel <edge>', got {line!r}", i)
    try:
        return SPSequence(tuple(ops))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_dh_sequence(text: str) -> DHSequence:
    ops: list[tuple] = []
    for i, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "root" and len(parts) == 2:
            ops.append(("root", parts[1]))
        elif parts[0] == "pendant" and len(parts) == 4 and parts[2] == "on":
            ops.append(("pendant", parts[1], parts[3]))
        elif parts[0] in ("truetwin", "falsetwin") and len(parts) == 4 and parts[2] == "of":
            ops.append((parts[0], parts[1], parts[3]))
        else:
            raise FormatError(f"expected 'root a', 'pendant b on a', "
                              f"'truetwin c of b' or 'falsetwin c of b', got {line!r}", i)
    try:
        return DHSequence(tuple(ops))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_chord_word(text: str) -> ChordDiagram:
    tokens = text.split()
    if not tokens:
        raise FormatError("empty chord word")
    try:
        return ChordDiagram(tokens)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
