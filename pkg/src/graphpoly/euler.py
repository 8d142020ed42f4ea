"""2-in 2-out directed multigraphs, graph states and the circuit partition polynomial.

Every vertex of an ``EulerDigraph`` has exactly two incoming and two outgoing
arcs (a loop contributes one of each at its vertex).  A transition system
picks, at each vertex, one of the two bijections pairing in-arcs to
out-arcs; following the pairings decomposes the arc set into consistently
oriented closed cycles, the graph state.  The circuit partition polynomial
counts transition systems by the number of cycles:

    f(G; x) = sum_k f_k x^k,  f_k = number of states with k cycles,

with f = 1 for the empty digraph.  Transition systems with exactly one
cycle are precisely the Euler circuits (up to rotation), which is how the
exhaustive circuit enumeration works; single circuits are extracted with
Hierholzer splicing instead.

``verify_circuit_partition_identity`` checks f(G; x) = x * q_N(H; x + 1)
where H is the circle graph of the chord diagram read off any Euler
circuit (the vertex-visit word, each vertex appearing twice).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .chords import ChordDiagram, circle_graph
from .interlace import qn_recursive
from .poly import SparsePoly


class EulerDigraph:
    """Immutable directed multigraph with in-degree = out-degree = 2 everywhere."""

    __slots__ = ("vertex_ids", "arcs", "_arc_index")

    def __init__(self, vertices: Iterable[str], arcs: Iterable[tuple]):
        vertex_ids = tuple(str(v) for v in vertices)
        if len(set(vertex_ids)) != len(vertex_ids):
            raise ValueError("duplicate vertex ids")
        norm = []
        seen = set()
        for arc in arcs:
            aid, tail, head = (str(x) for x in arc)
            if aid in seen:
                raise ValueError(f"duplicate arc id {aid!r}")
            seen.add(aid)
            if tail not in vertex_ids or head not in vertex_ids:
                raise ValueError(f"arc {aid!r} references unknown vertex")
            norm.append((aid, tail, head))
        indeg = {v: 0 for v in vertex_ids}
        outdeg = {v: 0 for v in vertex_ids}
        for _, tail, head in norm:
            outdeg[tail] += 1
            indeg[head] += 1
        for v in vertex_ids:
            if indeg[v] != 2 or outdeg[v] != 2:
                raise ValueError(f"vertex {v!r} has in/out degree "
                                 f"{indeg[v]}/{outdeg[v]}, need 2/2")
        object.__setattr__(self, "vertex_ids", vertex_ids)
        object.__setattr__(self, "arcs", tuple(norm))
        object.__setattr__(self, "_arc_index", {a[0]: a for a in norm})

    def __setattr__(self, name, value):
        raise AttributeError("EulerDigraph is immutable")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> "EulerDigraph":
        """Build from (tail, head) pairs; arc ids are assigned a1, a2, ..."""
        pairs = [(str(u), str(v)) for u, v in pairs]
        vertices = []
        for u, v in pairs:
            for z in (u, v):
                if z not in vertices:
                    vertices.append(z)
        arcs = [(f"a{i + 1}", u, v) for i, (u, v) in enumerate(pairs)]
        return cls(vertices, arcs)

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    def arc(self, aid: str) -> tuple:
        try:
            return self._arc_index[str(aid)]
        except KeyError:
            raise ValueError(f"unknown arc {aid!r}") from None

    def in_arcs(self, v: str) -> tuple:
        v = str(v)
        return tuple(a for a in self.arcs if a[2] == v)

    def out_arcs(self, v: str) -> tuple:
        v = str(v)
        return tuple(a for a in self.arcs if a[1] == v)

    def is_connected(self) -> bool:
        """Connectivity of the undirected support (vertexless graph counts as connected)."""
        if not self.vertex_ids:
            return True
        adj: dict[str, set] = {v: set() for v in self.vertex_ids}
        for _, t, h in self.arcs:
            adj[t].add(h)
            adj[h].add(t)
        start = self.vertex_ids[0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.vertex_ids)

    def __repr__(self):
        return f"EulerDigraph({self.n} vertices, {len(self.arcs)} arcs)"


@dataclass(frozen=True)
class TransitionSystem:
    """One in/out pairing per vertex: vertex -> ((in, out), (in, out)) arc ids."""

    pairing: tuple

    def as_dict(self) -> dict:
        return dict(self.pairing)


def _vertex_slots(g: EulerDigraph) -> list[tuple[str, tuple, tuple]]:
    """Per vertex, its two in-arc ids and two out-arc ids, in arc order."""
    ins: dict[str, list] = {v: [] for v in g.vertex_ids}
    outs: dict[str, list] = {v: [] for v in g.vertex_ids}
    for aid, tail, head in g.arcs:
        outs[tail].append(aid)
        ins[head].append(aid)
    return [(v, tuple(ins[v]), tuple(outs[v])) for v in g.vertex_ids]


def _count_cycles(successor: dict) -> int:
    seen = set()
    cycles = 0
    for start in successor:
        if start in seen:
            continue
        cycles += 1
        a = start
        while a not in seen:
            seen.add(a)
            a = successor[a]
    return cycles


def graph_states(g: EulerDigraph):
    """Yield (TransitionSystem, cycle count) for all 2^n transition systems.

    Enumeration order is the binary counter over vertices in id order, so
    runs are deterministic and can be partitioned by index range.
    """
    slots = _vertex_slots(g)
    n = len(slots)
    for code in range(1 << n):
        successor = {}
        pairing = []
        for k, (v, (i1, i2), (o1, o2)) in enumerate(slots):
            if code >> k & 1:
                o1, o2 = o2, o1
            successor[i1] = o1
            successor[i2] = o2
            pairing.append((v, ((i1, o1), (i2, o2))))
        yield TransitionSystem(tuple(pairing)), _count_cycles(successor)


def circuit_partition_polynomial(g: EulerDigraph) -> SparsePoly:
    """Generating polynomial of graph states by cycle count."""
    if not g.arcs:
        return SparsePoly.const(("x",), 1)
    counts: dict[int, int] = {}
    slots = _vertex_slots(g)
    n = len(slots)
    for code in range(1 << n):
        successor = {}
        for k, (v, (i1, i2), (o1, o2)) in enumerate(slots):
            if code >> k & 1:
                o1, o2 = o2, o1
            successor[i1] = o1
            successor[i2] = o2
        c = _count_cycles(successor)
        counts[c] = counts.get(c, 0) + 1
    return SparsePoly(("x",), {(k,): c for k, c in counts.items()})


def martin_polynomial(g: EulerDigraph) -> SparsePoly:
    """Martin polynomial m with f(G; x) = x * m(G; x+1)."""
    f = circuit_partition_polynomial(g)
    if not g.arcs:
        return f
    shifted = {}
    for (k,), c in f.terms.items():
        if k == 0:
            raise ValueError("circuit partition polynomial has a constant term")
        shifted[(k - 1,)] = c
    div = SparsePoly(("x",), shifted)
    return div.subs_poly("x", SparsePoly(("x",), {(1,): 1, (0,): -1}))


def euler_circuit(g: EulerDigraph) -> tuple:
    """One Euler circuit as a tuple of arc ids (Hierholzer splicing)."""
    if not g.arcs:
        raise ValueError("empty digraph has no Euler circuit")
    if not g.is_connected():
        raise ValueError("digraph support is disconnected")
    unused: dict[str, list] = {v: [] for v in g.vertex_ids}
    for arc in reversed(g.arcs):
        unused[arc[1]].append(arc)
    start = g.arcs[0][1]
    # iterative Hierholzer: walk until stuck, backtrack emitting arcs
    circuit = []
    v = start
    arc_stack = []
    while True:
        if unused[v]:
            arc = unused[v].pop()
            arc_stack.append(arc)
            v = arc[2]
        else:
            if not arc_stack:
                break
            arc = arc_stack.pop()
            circuit.append(arc)
            v = arc[1]
    circuit.reverse()
    if len(circuit) != len(g.arcs):
        raise ValueError("digraph support is disconnected")
    return tuple(a[0] for a in circuit)


def all_euler_circuits(g: EulerDigraph):
    """Yield every Euler circuit (as arc-id tuples) via 1-cycle transition systems."""
    if not g.arcs:
        return
    slots = _vertex_slots(g)
    n = len(slots)
    first_arc = g.arcs[0][0]
    for code in range(1 << n):
        successor = {}
        for k, (v, (i1, i2), (o1, o2)) in enumerate(slots):
            if code >> k & 1:
                o1, o2 = o2, o1
            successor[i1] = o1
            successor[i2] = o2
        if _count_cycles(successor) != 1:
            continue
        out = [first_arc]
        a = successor[first_arc]
        while a != first_arc:
            out.append(a)
            a = successor[a]
        yield tuple(out)


def check_circuit(g: EulerDigraph, circuit: Sequence[str]) -> None:
    ids = [str(a) for a in circuit]
    if sorted(ids) != sorted(a[0] for a in g.arcs):
        raise ValueError("circuit does not use every arc exactly once")
    for k, aid in enumerate(ids):
        head = g.arc(aid)[2]
        nxt = g.arc(ids[(k + 1) % len(ids)])[1]
        if head != nxt:
            raise ValueError(f"circuit breaks between arcs {aid!r} and {ids[(k + 1) % len(ids)]!r}")


def chord_diagram_from_circuit(g: EulerDigraph, circuit: Sequence[str]) -> ChordDiagram:
    """Vertex-visit word of the circuit; every vertex appears exactly twice."""
    check_circuit(g, circuit)
    return ChordDiagram(g.arc(aid)[1] for aid in circuit)


@dataclass(frozen=True)
class CircuitPartitionIdentityReport:
    """f(G; x) = x * q_N(H; x+1) over the checked circuits, plus circuit independence."""

    f: SparsePoly
    circuits_checked: int
    identity_ok: bool
    circuit_independent: bool

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.circuit_independent

    def __str__(self) -> str:
        return (f"f = {self.f}; {self.circuits_checked} circuit(s): "
                f"identity {'ok' if self.identity_ok else 'FAIL'}, "
                f"q_N circuit-independent: {'ok' if self.circuit_independent else 'FAIL'}")


def verify_circuit_partition_identity(g: EulerDigraph,
                                      exhaustive: bool | None = None) -> CircuitPartitionIdentityReport:
    """Check the circuit partition polynomial against the interlace route.

    ``exhaustive`` defaults to enumerating every Euler circuit when the
    digraph has at most 5 vertices, and a single circuit otherwise.
    """
    if exhaustive is None:
        exhaustive = g.n <= 5
    f = circuit_partition_polynomial(g)
    circuits = list(all_euler_circuits(g)) if exhaustive else [euler_circuit(g)]
    if not circuits:
        raise ValueError("no Euler circuit (disconnected or empty digraph)")
    x = SparsePoly.var("x")
    x_plus_1 = SparsePoly(("x",), {(1,): 1, (0,): 1})
    qns = []
    identity_ok = True
    for circ in circuits:
        h = circle_graph(chord_diagram_from_circuit(g, circ))
        qn = qn_recursive(h)
        qns.append(qn)
        identity_ok = identity_ok and (x * qn.subs_poly("x", x_plus_1) == f)
    independent = all(qn == qns[0] for qn in qns)
    return CircuitPartitionIdentityReport(f, len(circuits), identity_ok, independent)
