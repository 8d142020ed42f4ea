"""Undirected graphs with optional loops, over GF(2) adjacency matrices.

Vertices carry opaque string ids; internally each graph stores dense bitmask
adjacency rows (bit j of row i set iff vertices i and j are adjacent, with
the diagonal bit encoding a loop).  Graphs are immutable: every operation
returns a new value, so concurrent reads are safe.

The two structural operations the interlace theory rests on live here:

* ``pivot(g, u, v)``: for an edge uv, the vertex set splits into the three
  classes adjacent to u only, to v only, and to both (u and v themselves
  excluded).  The pivot toggles every non-loop edge between distinct
  classes and leaves everything else alone.  It is an involution.

* ``local_complement(g, a)``: complements the adjacency relation inside the
  neighbourhood N(a).  When a carries a loop, a belongs to N(a) and the
  complement acts on the full GF(2) submatrix including the diagonal, so
  loop states inside N(a) toggle too.  When a is loopless only the
  off-diagonal pairs toggle.  The looped convention is the one that makes
  the loop reduction of the two-variable interlace polynomial agree with
  its subset expansion (checked exhaustively in the test suite).
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Graph:
    """Immutable undirected graph, loops allowed, no parallel edges."""

    __slots__ = ("ids", "_index", "rows")

    def __init__(self, ids: Sequence[str], rows: Sequence[int]):
        ids = tuple(str(v) for v in ids)
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        rows = tuple(int(r) for r in rows)
        if len(rows) != len(ids):
            raise ValueError("row count does not match vertex count")
        n = len(ids)
        for i, r in enumerate(rows):
            if r >> n:
                raise ValueError("adjacency row has bits outside the vertex range")
            for j in range(n):
                if i != j and ((r >> j) & 1) != ((rows[j] >> i) & 1):
                    raise ValueError("adjacency is not symmetric")
        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(ids)})
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Iterable[str] = ()) -> "Graph":
        """Build from (u, v) pairs; (v, v) is a loop.  Extra isolated vertices allowed."""
        ids: list[str] = []
        index: dict[str, int] = {}

        def add(v):
            v = str(v)
            if v not in index:
                index[v] = len(ids)
                ids.append(v)
            return index[v]

        for v in vertices:
            add(v)
        pairs = []
        for u, v in edges:
            pairs.append((add(u), add(v)))
        rows = [0] * len(ids)
        for i, j in pairs:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(ids, rows)

    @classmethod
    def edgeless(cls, n: int, prefix: str = "v") -> "Graph":
        return cls.from_edges([], [f"{prefix}{i}" for i in range(1, n + 1)])

    # -- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.ids)

    def vertices(self) -> tuple:
        return self.ids

    def index_of(self, v) -> int:
        v = str(v)
        if v not in self._index:
            raise ValueError(f"unknown vertex {v!r}")
        return self._index[v]

    def has_vertex(self, v) -> bool:
        return str(v) in self._index

    def has_edge(self, u, v) -> bool:
        i, j = self.index_of(u), self.index_of(v)
        return bool(self.rows[i] >> j & 1)

    def has_loop(self, v) -> bool:
        i = self.index_of(v)
        return bool(self.rows[i] >> i & 1)

    def neighbors(self, v) -> tuple:
        """Neighbours of v in id order; v itself appears iff v is looped."""
        i = self.index_of(v)
        r = self.rows[i]
        return tuple(self.ids[j] for j in range(self.n) if r >> j & 1)

    def degree(self, v) -> int:
        i = self.index_of(v)
        return bin(self.rows[i]).count("1")

    def edges(self) -> list[tuple]:
        out = []
        for i in range(self.n):
            r = self.rows[i]
            for j in range(i, self.n):
                if r >> j & 1:
                    out.append((self.ids[i], self.ids[j]))
        return out

    def edge_count(self) -> int:
        return len(self.edges())

    def is_simple(self) -> bool:
        return all(not (r >> i & 1) for i, r in enumerate(self.rows))

    def require_simple(self, what: str = "operation") -> None:
        if not self.is_simple():
            raise ValueError(f"{what} requires a loopless graph")

    def __eq__(self, other) -> bool:
        """Labelled equality: same ids in any order, same adjacency."""
        if not isinstance(other, Graph):
            return NotImplemented
        if set(self.ids) != set(other.ids):
            return False
        return set(map(frozenset_edge, self.edges())) == set(map(frozenset_edge, other.edges()))

    def __hash__(self):
        return hash((frozenset(self.ids), frozenset(map(frozenset_edge, self.edges()))))

    def __repr__(self):
        return f"Graph({self.n} vertices, edges={self.edges()!r})"

    # -- structure ---------------------------------------------------------

    def induced(self, subset: Iterable[str]) -> "Graph":
        keep = [self.index_of(v) for v in subset]
        if len(set(keep)) != len(keep):
            raise ValueError("duplicate vertices in subset")
        keep.sort()
        ids = [self.ids[i] for i in keep]
        rows = []
        for i in keep:
            r = 0
            for new_j, j in enumerate(keep):
                if self.rows[i] >> j & 1:
                    r |= 1 << new_j
            rows.append(r)
        return Graph(ids, rows)

    def without(self, *drop) -> "Graph":
        gone = {str(v) for v in drop}
        for v in gone:
            self.index_of(v)
        return self.induced([v for v in self.ids if v not in gone])

    def subset_mask(self, subset: Iterable[str]) -> int:
        mask = 0
        for v in subset:
            mask |= 1 << self.index_of(v)
        return mask

    def components(self) -> list[tuple]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                i = stack.pop()
                comp.append(i)
                r = self.rows[i]
                for j in range(self.n):
                    if r >> j & 1 and not seen[j]:
                        seen[j] = True
                        stack.append(j)
            out.append(tuple(self.ids[i] for i in sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if self.rows[s] >> s & 1:
                return False
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                i = stack.pop()
                r = self.rows[i]
                for j in range(self.n):
                    if r >> j & 1:
                        if color[j] < 0:
                            color[j] = 1 - color[i]
                            stack.append(j)
                        elif color[j] == color[i]:
                            return False
        return True

    # -- GF(2) linear algebra -----------------------------------------------

    def rank_nullity(self, subset: Iterable[str] | None = None) -> tuple[int, int]:
        """GF(2) rank and nullity of the adjacency matrix of the induced subgraph."""
        mask = (1 << self.n) - 1 if subset is None else self.subset_mask(subset)
        return rank_nullity_mask(self.rows, mask)

    # -- pivot and complementation ----------------------------------------

    def pivot(self, u, v) -> "Graph":
        """Pivot on the edge uv (toggles edges between the three u/v classes)."""
        i, j = self.index_of(u), self.index_of(v)
        if not (self.rows[i] >> j & 1) or i == j:
            raise ValueError(f"{u!r}{v!r} is not an edge")
        rows = list(self.rows)
        rows = pivot_rows(rows, i, j)
        return Graph(self.ids, rows)

    def local_complement(self, a) -> "Graph":
        """Complement adjacency inside N(a); see the module docstring for loops."""
        i = self.index_of(a)
        rows = list(self.rows)
        nbhd = rows[i]
        if nbhd >> i & 1:
            # looped: full submatrix complement on N(a), diagonal included
            for k in range(len(rows)):
                if nbhd >> k & 1:
                    rows[k] ^= nbhd
        else:
            for k in range(len(rows)):
                if nbhd >> k & 1:
                    rows[k] ^= nbhd & ~(1 << k)
        return Graph(self.ids, rows)

    # -- joins ----------------------------------------------------------------

    def disjoint_union(self, other: "Graph") -> "Graph":
        relabel = _fresh_names(self.ids, other.ids)
        ids = self.ids + tuple(relabel[v] for v in other.ids)
        shift = self.n
        rows = list(self.rows) + [r << shift for r in other.rows]
        return Graph(ids, rows)

    def one_point_join(self, u, other: "Graph", v) -> "Graph":
        """Identify u in self with v in other; the merged vertex keeps u's id."""
        self.index_of(u)
        other.index_of(v)
        relabel = _fresh_names(self.ids, other.ids)
        edges = self.edges()
        for a, b in other.edges():
            a2 = str(u) if a == str(v) else relabel[a]
            b2 = str(u) if b == str(v) else relabel[b]
            edges.append((a2, b2))
        verts = list(self.ids) + [relabel[w] for w in other.ids if w != str(v)]
        return Graph.from_edges(edges, verts)

    def two_point_join(self, u, other: "Graph", v) -> "Graph":
        """Keep u and v, cross-connect each to the other's neighbours (u, v become false twins)."""
        self.index_of(u)
        other.index_of(v)
        relabel = _fresh_names(self.ids, other.ids)
        edges = self.edges()
        edges.extend((relabel[a], relabel[b]) for a, b in other.edges())
        for w in other.neighbors(v):
            edges.append((str(u), relabel[w]))
        for w in self.neighbors(u):
            edges.append((relabel[str(v)], w))
        verts = list(self.ids) + [relabel[w] for w in other.ids]
        # from_edges ignores duplicates since adjacency is a relation
        return Graph.from_edges(edges, verts)


def frozenset_edge(e: tuple) -> frozenset:
    return frozenset(e)


def _fresh_names(taken: Sequence[str], incoming: Sequence[str]) -> dict:
    """Rename colliding incoming ids by appending primes."""
    used = set(taken)
    out = {}
    for v in incoming:
        name = v
        while name in used:
            name += "'"
        out[v] = name
        used.add(name)
    return out


# -- bitmask helpers shared with the interlace module -------------------------


def rank_nullity_mask(rows: Sequence[int], mask: int) -> tuple[int, int]:
    """GF(2) rank and nullity of the submatrix selected by a vertex bitmask."""
    size = bin(mask).count("1")
    pivots: dict[int, int] = {}
    rank = 0
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        m ^= low
        cur = rows[i] & mask
        while cur:
            p = cur & -cur
            if p in pivots:
                cur ^= pivots[p]
            else:
                pivots[p] = cur
                rank += 1
                break
    return rank, size - rank


def pivot_rows(rows: list[int], i: int, j: int) -> list[int]:
    """Pivot toggle on dense rows; callers must know ij is an edge."""
    exclude = (1 << i) | (1 << j)
    ni = rows[i] & ~exclude
    nj = rows[j] & ~exclude
    both = ni & nj
    only_i = ni & ~nj
    only_j = nj & ~ni
    rows = list(rows)
    for cls, others in ((only_i, only_j | both), (only_j, only_i | both), (both, only_i | only_j)):
        m = cls
        while m:
            low = m & -m
            k = low.bit_length() - 1
            m ^= low
            rows[k] ^= others
    return rows


def delete_index(rows: Sequence[int], i: int) -> tuple[int, ...]:
    """Remove vertex i from dense rows, compacting indices."""
    low_mask = (1 << i) - 1
    out = []
    for k, r in enumerate(rows):
        if k == i:
            continue
        out.append((r & low_mask) | ((r >> (i + 1)) << i))
    return tuple(out)


# -- small named graphs (test and CLI convenience) ---------------------------


def complete_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges([(u, v) for k, u in enumerate(vs) for v in vs[k + 1:]], vs)


def cycle_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges([(vs[i], vs[(i + 1) % n]) for i in range(n)], vs)


def path_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges([(vs[i], vs[i + 1]) for i in range(n - 1)], vs)


def star_graph(m: int) -> Graph:
    """K_{1,m} with centre c."""
    leaves = [str(i) for i in range(1, m + 1)]
    return Graph.from_edges([("c", v) for v in leaves], ["c"] + leaves)
