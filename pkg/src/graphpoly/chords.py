"""Chord diagrams (double-occurrence words) and their circle graphs.

A chord diagram is a cyclic word in which every label occurs exactly twice;
each label is a chord between its two occurrences.  The circle graph has the
chords as vertices, adjacent iff their occurrences interleave, which for a
stored linear word means exactly one occurrence of one chord lies strictly
between the two occurrences of the other.

``chord_pivot`` realizes the graph pivot on the word: with occurrences in
linear order p1 < p2 < p3 < p4 alternating between the two chords, the
segments (p1, p2) and (p3, p4) are exchanged and the two chord labels are
swapped.  The label swap is needed because the bare arc exchange produces
the pivot composed with the transposition of the two pivoted vertices.  The
result is asserted against the graph-level pivot, so a violation is loud.

The C-polynomial of a diagram is the subset expansion
C(D; Y, Z) = sum over subdiagrams D' of Y^{#chords} Z^{rank/2}, where rank
is the GF(2) rank of the circle graph of D' (always even, since loopless
symmetric GF(2) matrices have even rank).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from .graphs import Graph, rank_nullity_mask
from .interlace import q_state_sum
from .poly import SparsePoly


class ChordDiagram:
    """Immutable double-occurrence word over string labels."""

    __slots__ = ("word",)

    def __init__(self, word: Iterable[str]):
        word = tuple(str(c) for c in word)
        counts: dict[str, int] = {}
        for c in word:
            counts[c] = counts.get(c, 0) + 1
        bad = sorted(c for c, k in counts.items() if k != 2)
        if bad:
            raise ValueError(f"not a double-occurrence word; bad labels: {', '.join(bad)}")
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("ChordDiagram is immutable")

    @classmethod
    def from_text(cls, text: str) -> "ChordDiagram":
        return cls(text.split())

    def __str__(self) -> str:
        return " ".join(self.word)

    def __repr__(self) -> str:
        return f"ChordDiagram({self!s})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ChordDiagram) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    @property
    def size(self) -> int:
        return len(self.word) // 2

    def labels(self) -> tuple:
        seen = []
        for c in self.word:
            if c not in seen:
                seen.append(c)
        return tuple(seen)

    def positions(self, label: str) -> tuple[int, int]:
        ps = [i for i, c in enumerate(self.word) if c == str(label)]
        if not ps:
            raise ValueError(f"unknown chord {label!r}")
        return ps[0], ps[1]

    def rotate(self, k: int) -> "ChordDiagram":
        w = self.word
        k %= max(len(w), 1)
        return ChordDiagram(w[k:] + w[:k])

    def reflect(self) -> "ChordDiagram":
        return ChordDiagram(tuple(reversed(self.word)))

    def delete(self, *labels: str) -> "ChordDiagram":
        gone = {str(x) for x in labels}
        for x in gone:
            self.positions(x)
        return ChordDiagram(c for c in self.word if c not in gone)

    def restrict(self, keep: Iterable[str]) -> "ChordDiagram":
        keep = {str(x) for x in keep}
        return ChordDiagram(c for c in self.word if c in keep)


def circle_graph(d: ChordDiagram) -> Graph:
    """Simple graph on the chords, adjacent iff the chords interleave."""
    labels = d.labels()
    pos = {c: d.positions(c) for c in labels}
    edges = []
    for i, a in enumerate(labels):
        p1, p2 = pos[a]
        for b in labels[i + 1:]:
            q1, q2 = pos[b]
            if (p1 < q1 < p2) != (p1 < q2 < p2):
                edges.append((a, b))
    return Graph.from_edges(edges, labels)


def chords_cross(d: ChordDiagram, a: str, b: str) -> bool:
    p1, p2 = d.positions(a)
    q1, q2 = d.positions(b)
    return (p1 < q1 < p2) != (p1 < q2 < p2)


def chord_pivot(d: ChordDiagram, a: str, b: str) -> ChordDiagram:
    """Diagram whose circle graph is the pivot of circle_graph(d) on edge ab."""
    a, b = str(a), str(b)
    if not chords_cross(d, a, b):
        raise ValueError(f"chords {a!r} and {b!r} do not cross")
    w = d.word
    pts = sorted(d.positions(a) + d.positions(b))
    p1, p2, p3, p4 = pts
    swapped = (w[:p1] + (w[p1],) + w[p3 + 1:p4] + (w[p2],) + w[p2 + 1:p3]
               + (w[p3],) + w[p1 + 1:p2] + (w[p4],) + w[p4 + 1:])
    relabel = {a: b, b: a}
    out = ChordDiagram(relabel.get(c, c) for c in swapped)
    if circle_graph(out) != circle_graph(d).pivot(a, b):
        raise AssertionError("arc exchange failed to realize the graph pivot")
    return out


def c_polynomial(d: ChordDiagram) -> SparsePoly:
    """C(D; Y, Z) over all subdiagrams; Z-exponent is half the circle-graph rank."""
    h = circle_graph(d)
    labels = d.labels()
    n = len(labels)
    rows = h.rows  # circle_graph preserves label order, so indices line up
    acc: dict[tuple[int, int], int] = {}
    for mask in range(1 << n):
        r, _ = rank_nullity_mask(rows, mask)
        if r % 2:
            raise AssertionError("odd GF(2) rank on a loopless circle graph")
        key = (bin(mask).count("1"), r // 2)
        acc[key] = acc.get(key, 0) + 1
    return SparsePoly(("Y", "Z"), acc)


# -- numeric identity checks ---------------------------------------------------


@dataclass(frozen=True)
class CPolyIdentityReport:
    """Point checks of q(H; Y*sqrt(Z)+1, Y+1) = C(D; Y, Z)."""

    points: tuple
    values_c: tuple
    values_q: tuple

    @property
    def ok(self) -> bool:
        return self.values_c == self.values_q

    def __str__(self) -> str:
        rows = []
        for (yv, zv), cv, qv in zip(self.points, self.values_c, self.values_q):
            mark = "ok" if cv == qv else "FAIL"
            rows.append(f"(Y={yv}, Z={zv}): C={cv} q={qv} {mark}")
        return "; ".join(rows)


def verify_c_identity(d: ChordDiagram, points: Sequence[tuple[int, int]]) -> CPolyIdentityReport:
    """Check the C-polynomial against the interlace polynomial at integer points.

    Each Z must be a perfect square so the substitution x = Y*sqrt(Z) + 1
    stays integral.
    """
    c = c_polynomial(d)
    q = q_state_sum(circle_graph(d))
    cs, qs = [], []
    for yv, zv in points:
        s = isqrt(zv)
        if s * s != zv:
            raise ValueError(f"Z={zv} is not a perfect square")
        cs.append(c.eval_int({"Y": yv, "Z": zv}))
        qs.append(q.eval_int({"x": yv * s + 1, "y": yv + 1}))
    return CPolyIdentityReport(tuple(points), tuple(cs), tuple(qs))


@dataclass(frozen=True)
class CReductionReport:
    """Numeric test of the two candidate pivot reductions for C.

    variant_minus_b is the direct analogue of the two-variable pivot
    recursion (second term from deleting the other pivot chord); the
    variant_minus_a form deletes the same chord twice.  Both are evaluated
    because the two differ on asymmetric diagrams.
    """

    points: tuple
    variant_minus_a_ok: bool
    variant_minus_b_ok: bool

    @property
    def ok(self) -> bool:
        return self.variant_minus_a_ok or self.variant_minus_b_ok

    def __str__(self) -> str:
        return (f"C reduction: variant with D^ab-a {'holds' if self.variant_minus_a_ok else 'fails'}, "
                f"variant with D^ab-b {'holds' if self.variant_minus_b_ok else 'fails'}")


def verify_c_reduction(d: ChordDiagram, a: str, b: str,
                       points: Sequence[tuple[int, int]] = ((1, 1), (2, 4), (3, 9))) -> CReductionReport:
    """Test C(D) = C(D-a) + C(second term) + (Y^2 Z - 1) C(D^ab - a - b) at points."""
    a, b = str(a), str(b)
    if not chords_cross(d, a, b):
        raise ValueError(f"chords {a!r} and {b!r} do not cross")
    piv = chord_pivot(d, a, b)
    c_full = c_polynomial(d)
    c_da = c_polynomial(d.delete(a))
    c_pa = c_polynomial(piv.delete(a))
    c_pb = c_polynomial(piv.delete(b))
    c_pab = c_polynomial(piv.delete(a, b))
    ok_a = ok_b = True
    for yv, zv in points:
        at = {"Y": yv, "Z": zv}
        lhs = c_full.eval_int(at)
        base = c_da.eval_int(at) + (yv * yv * zv - 1) * c_pab.eval_int(at)
        ok_a = ok_a and lhs == base + c_pa.eval_int(at)
        ok_b = ok_b and lhs == base + c_pb.eval_int(at)
    return CReductionReport(tuple(points), ok_a, ok_b)
