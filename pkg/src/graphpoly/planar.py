"""Plane multigraphs, series-parallel construction, medial digraphs and Tutte polynomials.

A plane multigraph is stored as a rotation system: per vertex, the cyclic
order of incident edge-ends (darts).  Faces are the orbits of the map
"twin dart, then rotation successor", and for a connected graph the embedding
is certified planar by Euler's formula |V| - |E| + |F| = 2.

The oriented medial digraph has one vertex per edge of the plane graph; for
every vertex v and every consecutive pair (e, e') in the rotation at v there
is one arc m_e -> m_e'.  Around each original vertex these arcs form a
directed cycle, which makes the faces containing original vertices the
consistently oriented ones, and gives every medial vertex in- and
out-degree 2.

Tutte polynomials are computed two ways: plain deletion/contraction with
eager loop and bridge peeling (any multigraph), and for series-parallel
construction sequences a polynomial-time diagonal evaluator that reduces
the edge-weighted partition function

    Z(G; q, w) = sum over edge subsets A of q^{components(A)} * prod w_e

by parallel merge (w <- w1 + w2 + w1*w2), series merge at a degree-2 vertex
(w <- w1*w2 / (q + w1 + w2), global factor q + w1 + w2) and loop removal
(factor 1 + w), then recovers t(G; x0, x0) = Z / (x0-1)^{|V|+1} at integer
points x0 and interpolates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .euler import EulerDigraph, chord_diagram_from_circuit, euler_circuit
from .chords import circle_graph
from .interlace import gamma_invariant, qn_recursive
from .poly import SparsePoly

Dart = tuple[str, int]  # (edge id, side 0 or 1)


class PlaneMultigraph:
    """Multigraph with an explicit rotation system (combinatorial embedding)."""

    __slots__ = ("vertex_ids", "edge_map", "rotation")

    def __init__(self, vertices: Iterable[str], edges: dict, rotation: dict):
        vertex_ids = tuple(str(v) for v in vertices)
        if len(set(vertex_ids)) != len(vertex_ids):
            raise ValueError("duplicate vertex ids")
        edge_map = {str(e): (str(u), str(v)) for e, (u, v) in edges.items()}
        rot = {str(v): tuple((str(e), int(s)) for e, s in rotation.get(v, ())) for v in vertex_ids}
        # each dart must sit in exactly one rotation, at its own endpoint
        expected: dict[Dart, str] = {}
        for e, (u, v) in edge_map.items():
            if u not in vertex_ids or v not in vertex_ids:
                raise ValueError(f"edge {e!r} references unknown vertex")
            expected[(e, 0)] = u
            expected[(e, 1)] = v
        seen: set[Dart] = set()
        for v, darts in rot.items():
            for d in darts:
                if d in seen:
                    raise ValueError(f"dart {d!r} appears twice in the rotation system")
                if d not in expected:
                    raise ValueError(f"dart {d!r} does not belong to any edge")
                if expected[d] != v:
                    raise ValueError(f"dart {d!r} listed at {v!r}, belongs at {expected[d]!r}")
                seen.add(d)
        missing = set(expected) - seen
        if missing:
            raise ValueError(f"darts missing from the rotation system: {sorted(missing)}")
        object.__setattr__(self, "vertex_ids", vertex_ids)
        object.__setattr__(self, "edge_map", edge_map)
        object.__setattr__(self, "rotation", rot)

    def __setattr__(self, name, value):
        raise AttributeError("PlaneMultigraph is immutable")

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    @property
    def m(self) -> int:
        return len(self.edge_map)

    def edge_list(self) -> list[tuple[str, str]]:
        return [self.edge_map[e] for e in sorted(self.edge_map)]

    def is_connected(self) -> bool:
        if not self.vertex_ids:
            return True
        adj: dict[str, set] = {v: set() for v in self.vertex_ids}
        for u, v in self.edge_map.values():
            adj[u].add(v)
            adj[v].add(u)
        seen = {self.vertex_ids[0]}
        stack = [self.vertex_ids[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def faces(self) -> list[tuple[Dart, ...]]:
        """Face boundaries as dart orbits of (twin, then rotation successor)."""
        succ: dict[Dart, Dart] = {}
        for v, darts in self.rotation.items():
            k = len(darts)
            for i, d in enumerate(darts):
                succ[d] = darts[(i + 1) % k]
        twin = {}
        for e in self.edge_map:
            twin[(e, 0)] = (e, 1)
            twin[(e, 1)] = (e, 0)
        out = []
        seen: set[Dart] = set()
        for d0 in sorted(succ):
            if d0 in seen:
                continue
            face = []
            d = d0
            while d not in seen:
                seen.add(d)
                face.append(d)
                d = succ[twin[d]]
            out.append(tuple(face))
        return out

    def euler_formula_ok(self) -> bool:
        """Planarity certificate for connected graphs: V - E + F = 2."""
        if not self.is_connected():
            raise ValueError("Euler formula check needs a connected graph")
        return self.n - self.m + len(self.faces()) == 2


# -- series-parallel construction ------------------------------------------------


@dataclass(frozen=True)
class SPSequence:
    """Construction script: "digon" first, then series/parallel ops on edge ids.

    The digon creates edges e1 and e2; the k-th later op creates edge
    e{k+2} (series: the named edge keeps its id for the half at its first
    endpoint, the new id is the other half; parallel: the new id is the new
    parallel edge).
    """

    ops: tuple

    def __post_init__(self):
        ops = tuple(self.ops)
        object.__setattr__(self, "ops", ops)
        if not ops or ops[0] != ("digon",):
            raise ValueError('an SPSequence must start with ("digon",)')
        known = {"e1", "e2"}
        counter = 2
        for op in ops[1:]:
            if len(op) != 2 or op[0] not in ("series", "parallel"):
                raise ValueError(f"bad op {op!r}")
            if op[1] not in known:
                raise ValueError(f"op {op!r} references unknown edge")
            counter += 1
            known.add(f"e{counter}")

    def __len__(self):
        return len(self.ops)

    def dual(self) -> "SPSequence":
        swap = {"series": "parallel", "parallel": "series"}
        return SPSequence((("digon",),) + tuple((swap[k], e) for k, e in self.ops[1:]))

    def to_text(self) -> str:
        return "\n".join(op[0] if len(op) == 1 else f"{op[0]} {op[1]}" for op in self.ops) + "\n"


def build_sp(seq: SPSequence) -> PlaneMultigraph:
    """Replay a series-parallel construction into a plane multigraph."""
    vertices = ["v1", "v2"]
    edges = {"e1": ("v1", "v2"), "e2": ("v1", "v2")}
    rotation = {"v1": [("e1", 0), ("e2", 0)], "v2": [("e2", 1), ("e1", 1)]}
    counter = 2
    nv = 2
    for kind, e in seq.ops[1:]:
        counter += 1
        f = f"e{counter}"
        u, v = edges[e]
        if kind == "series":
            nv += 1
            mid = f"v{nv}"
            vertices.append(mid)
            edges[e] = (u, mid)
            edges[f] = (mid, v)
            rotation[mid] = [(e, 1), (f, 0)]
            rv = rotation[v]
            rv[rv.index((e, 1))] = (f, 1)
        else:
            edges[f] = (u, v)
            ru = rotation[u]
            ru.insert(ru.index((e, 0)) + 1, (f, 0))
            rv = rotation[v]
            rv.insert(rv.index((e, 1)), (f, 1))
    return PlaneMultigraph(vertices, edges, {v: tuple(r) for v, r in rotation.items()})


# -- medial digraph ----------------------------------------------------------------


def medial_digraph(g: PlaneMultigraph) -> EulerDigraph:
    """Oriented medial digraph: arcs follow the rotation order at each vertex."""
    if not g.is_connected():
        raise ValueError("medial digraph needs a connected plane graph")
    if g.m == 0:
        raise ValueError("medial digraph needs at least one edge")
    has_loop = any(u == v for u, v in g.edge_map.values())
    if g.m < 2 and not has_loop:
        raise ValueError("medial of a bridge-only graph with fewer than 2 edges degenerates")
    arcs = []
    k = 0
    for v in g.vertex_ids:
        darts = g.rotation[v]
        d = len(darts)
        for i in range(d):
            e1 = darts[i][0]
            e2 = darts[(i + 1) % d][0]
            k += 1
            arcs.append((f"m{k}", e1, e2))
    return EulerDigraph(sorted(g.edge_map), arcs)


# -- Tutte polynomial by deletion / contraction ----------------------------------


_tutte_memo: dict[tuple, dict] = {}


def _normalize_edges(edges: Sequence[tuple]) -> tuple:
    """Deterministic labelled key: relabel by first occurrence in sorted edge order."""
    sorted_edges = sorted(tuple(sorted(e)) for e in edges)
    label: dict = {}
    out = []
    for u, v in sorted_edges:
        for z in (u, v):
            if z not in label:
                label[z] = len(label)
        out.append((label[u], label[v]) if label[u] <= label[v] else (label[v], label[u]))
    return tuple(sorted(out))


def _components_of(edges: Sequence[tuple]) -> list[list[tuple]]:
    parent: dict = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for u, v in edges:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict = {}
    for e in edges:
        groups.setdefault(find(e[0]), []).append(e)
    return list(groups.values())


def _bridges(edges: list[tuple]) -> set[int]:
    """Indices of bridge edges (parallel copies are never bridges)."""
    adj: dict = {}
    for idx, (u, v) in enumerate(edges):
        adj.setdefault(u, []).append((v, idx))
        adj.setdefault(v, []).append((u, idx))
    disc: dict = {}
    low: dict = {}
    out: set[int] = set()
    timer = [0]

    for root in adj:
        if root in disc:
            continue
        stack = [(root, -1, iter(adj[root]))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        while stack:
            v, pedge, it = stack[-1]
            advanced = False
            for w, idx in it:
                if idx == pedge:
                    continue
                if w not in disc:
                    disc[w] = low[w] = timer[0]
                    timer[0] += 1
                    stack.append((w, idx, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        out.add(pedge)
    return out


def _tutte_connected(edges: tuple) -> dict:
    """Tutte of a connected multigraph given as a normalized edge tuple."""
    cached = _tutte_memo.get(edges)
    if cached is not None:
        return cached
    work = list(edges)
    i = 0  # isthmus count
    j = 0  # loop count
    while True:
        loops = [e for e in work if e[0] == e[1]]
        j += len(loops)
        work = [e for e in work if e[0] != e[1]]
        if not work:
            break
        br = _bridges(work)
        if not br:
            break
        i += len(br)
        # contract every bridge: union-find of bridge endpoints
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        for idx in br:
            u, v = work[idx]
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        nxt = []
        for idx, (u, v) in enumerate(work):
            if idx in br:
                continue
            u2, v2 = find(u) if u in parent else u, find(v) if v in parent else v
            nxt.append(tuple(sorted((u2, v2))))
        work = nxt
    if not work:
        res = {(i, j): 1}
        _tutte_memo[edges] = res
        return res
    key = _normalize_edges(work)
    sub = _tutte_memo.get(key)
    if sub is None:
        u, v = key[0]
        rest = list(key[1:])
        d1 = _tutte_connected(_normalize_edges(rest))
        contracted = [tuple(sorted((u if a == v else a, u if b == v else b))) for a, b in rest]
        d2 = _tutte_connected(_normalize_edges(contracted))
        sub = dict(d1)
        for k2, c in d2.items():
            sub[k2] = sub.get(k2, 0) + c
        _tutte_memo[key] = sub
    res = {(a + i, b + j): c for (a, b), c in sub.items()}
    _tutte_memo[edges] = res
    return res


def tutte_polynomial(g) -> SparsePoly:
    """Tutte polynomial of a multigraph (PlaneMultigraph or iterable of edge pairs)."""
    if isinstance(g, PlaneMultigraph):
        edges = g.edge_list()
    else:
        edges = [tuple(e) for e in g]
    if not edges:
        return SparsePoly.const(("x", "y"), 1)
    acc = {(0, 0): 1}
    for comp in _components_of(edges):
        part = _tutte_connected(_normalize_edges(comp))
        nxt: dict = {}
        for (a, b), c in acc.items():
            for (a2, b2), c2 in part.items():
                k2 = (a + a2, b + b2)
                nxt[k2] = nxt.get(k2, 0) + c * c2
        acc = nxt
    return SparsePoly(("x", "y"), acc)


def diagonal(p: SparsePoly) -> SparsePoly:
    """Collapse a polynomial in x and y to the diagonal y = x."""
    acc: dict = {}
    for (a, b), c in p.terms.items():
        acc[(a + b,)] = acc.get((a + b,), 0) + c
    return SparsePoly(("x",), acc)


def beta_invariant(g) -> int:
    """Common coefficient of x^1 and y^1 in the Tutte polynomial (needs >= 2 edges)."""
    if isinstance(g, PlaneMultigraph):
        m = g.m
    else:
        g = [tuple(e) for e in g]
        m = len(g)
    if m < 2:
        raise ValueError("beta needs at least 2 edges")
    t = tutte_polynomial(g)
    bx = t.coefficient({"x": 1})
    by = t.coefficient({"y": 1})
    if bx != by:
        raise AssertionError(f"x and y coefficients differ: {bx} vs {by}")
    return bx


def spanning_tree_count(edges: Sequence[tuple]) -> int:
    """Brute-force spanning tree count (oracle for t(G; 1, 1), small inputs only)."""
    edges = [tuple(e) for e in edges]
    verts = sorted({z for e in edges for z in e})
    n = len(verts)
    if n == 0:
        return 1
    idx = {v: i for i, v in enumerate(verts)}
    count = 0
    for sub in combinations(range(len(edges)), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for k in sub:
            u, v = edges[k]
            ru, rv = find(idx[u]), find(idx[v])
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            count += 1
    return count


# -- fast diagonal Tutte for series-parallel sequences ------------------------------


def _sp_partition_value(edges: dict, nv: int, x0: int) -> Fraction:
    """Z(G; (x0-1)^2, x0-1) by series/parallel/loop reduction, exact rationals."""
    q = Fraction((x0 - 1) ** 2)
    w0 = Fraction(x0 - 1)
    inc: dict[str, list] = {}
    weight = {}
    ends = {}
    for e, (u, v) in edges.items():
        weight[e] = w0
        ends[e] = (u, v)
        inc.setdefault(u, []).append(e)
        if v != u:
            inc.setdefault(v, []).append(e)
    vertices = set(inc)
    extra_isolated = nv - len(vertices)
    prefactor = Fraction(1)

    def drop_edge(e):
        u, v = ends[e]
        inc[u].remove(e)
        if v != u:
            inc[v].remove(e)
        del ends[e], weight[e]

    while True:
        # loops
        loop = next((e for e, (u, v) in ends.items() if u == v), None)
        if loop is not None:
            prefactor *= 1 + weight[loop]
            u = ends[loop][0]
            inc[u].remove(loop)
            del ends[loop], weight[loop]
            continue
        # parallel pair
        par = None
        for v, es in inc.items():
            seen: dict = {}
            for e in es:
                key = frozenset(ends[e])
                if key in seen:
                    par = (seen[key], e)
                    break
                seen[key] = e
            if par:
                break
        if par:
            e1, e2 = par
            weight[e1] = weight[e1] + weight[e2] + weight[e1] * weight[e2]
            drop_edge(e2)
            continue
        if len(ends) <= 1:
            break
        # series merge at a degree-2 vertex
        mid = next((v for v, es in inc.items() if len(es) == 2), None)
        if mid is None:
            raise ValueError("series-parallel reduction is stuck (input not series-parallel?)")
        e1, e2 = inc[mid]
        u = ends[e1][0] if ends[e1][1] == mid else ends[e1][1]
        z = ends[e2][0] if ends[e2][1] == mid else ends[e2][1]
        denom = q + weight[e1] + weight[e2]
        if denom == 0:
            raise ZeroDivisionError("vanishing series denominator")
        prefactor *= denom
        wnew = weight[e1] * weight[e2] / denom
        drop_edge(e2)
        # retarget e1 to (u, z)
        inc[mid].remove(e1)
        vertices.discard(mid)
        del inc[mid]
        ends[e1] = (u, z)
        weight[e1] = wnew
        if z != u:
            inc[z].append(e1)
        # u keeps e1 in its list already
        if z == u:
            pass  # became a loop; next pass removes it
        continue

    remaining = len([v for v in vertices if v in inc]) + extra_isolated
    if not ends:
        return prefactor * q ** remaining
    (e,) = ends
    return prefactor * q ** (remaining - 1) * (q + weight[e])


def sp_diagonal_tutte(seq: SPSequence) -> SparsePoly:
    """t(G; x, x) of a series-parallel construction, in polynomial time.

    Evaluates the weighted partition function at |E| + 2 integer points and
    interpolates; the interpolation must come out with integer coefficients.
    """
    g = build_sp(seq)
    m = g.m
    nv = g.n
    points = []
    x0 = 2
    while len(points) < m + 2:
        try:
            z = _sp_partition_value(dict(g.edge_map), nv, x0)
        except ZeroDivisionError:
            x0 += 1
            continue
        value = z / Fraction((x0 - 1) ** (nv + 1))
        points.append((x0, value))
        x0 += 1
    return SparsePoly.interpolate_integer(points, "x")


# -- medial / diagonal identity -----------------------------------------------------


@dataclass(frozen=True)
class MedialTutteReport:
    """q_N(H; x) = t(G; x, x) for the circle graph H of a medial Euler circuit,
    plus gamma(H) = 2 * beta(G)."""

    tutte_diagonal: SparsePoly
    qn_circle: SparsePoly
    gamma: int
    beta: int

    @property
    def ok(self) -> bool:
        return self.tutte_diagonal == self.qn_circle and self.gamma == 2 * self.beta

    def __str__(self) -> str:
        eq = "=" if self.tutte_diagonal == self.qn_circle else "!="
        gq = "=" if self.gamma == 2 * self.beta else "!="
        return (f"q_N(H) = {self.qn_circle} {eq} t(G;x,x) = {self.tutte_diagonal}; "
                f"gamma(H) = {self.gamma} {gq} 2*beta(G) = {2 * self.beta}")


def verify_medial_tutte_identity(g) -> MedialTutteReport:
    """Run the medial pipeline on a plane graph or SPSequence and compare both sides."""
    if isinstance(g, SPSequence):
        g = build_sp(g)
    if not isinstance(g, PlaneMultigraph):
        raise TypeError("need a PlaneMultigraph or SPSequence")
    if g.m < 2:
        raise ValueError("identity check needs at least 2 edges")
    t_diag = diagonal(tutte_polynomial(g))
    med = medial_digraph(g)
    circ = euler_circuit(med)
    h = circle_graph(chord_diagram_from_circuit(med, circ))
    qn = qn_recursive(h)
    return MedialTutteReport(t_diag, qn, gamma_invariant(h), beta_invariant(g))
