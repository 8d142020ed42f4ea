import random

import pytest

from graphpoly.euler import (EulerDigraph, all_euler_circuits, check_circuit,
                             chord_diagram_from_circuit,
                             circuit_partition_polynomial, euler_circuit,
                             graph_states, martin_polynomial,
                             verify_circuit_partition_identity)
from graphpoly.poly import SparsePoly
from graphpoly.randgen import random_2in2out


def X(terms):
    return SparsePoly(("x",), terms)


def digon_medial():
    return EulerDigraph.from_pairs([("u", "w"), ("u", "w"), ("w", "u"), ("w", "u")])


def test_degree_validation():
    with pytest.raises(ValueError):
        EulerDigraph.from_pairs([("a", "b")])
    with pytest.raises(ValueError):
        EulerDigraph(["a"], [("x", "a", "a")])  # only one loop: in/out degree 1


def test_two_loops_states():
    g = EulerDigraph.from_pairs([("v", "v"), ("v", "v")])
    counts = sorted(c for _, c in graph_states(g))
    assert counts == [1, 2]
    assert circuit_partition_polynomial(g) == X({(2,): 1, (1,): 1})


def test_digon_medial_polynomial():
    f = circuit_partition_polynomial(digon_medial())
    assert f == X({(2,): 2, (1,): 2})


def test_edgeless_polynomial_is_one():
    g = EulerDigraph([], [])
    assert circuit_partition_polynomial(g) == X({(0,): 1})
    states = list(graph_states(g))
    assert states == [(states[0][0], 0)]


def test_state_count_is_power_of_two():
    rng = random.Random(51)
    for _ in range(20):
        g = random_2in2out(rng.randrange(1, 7), rng)
        f = circuit_partition_polynomial(g)
        assert sum(f.terms.values()) == 2 ** g.n
        assert f.coefficient({"x": 0}) == 0  # no constant term when edges exist


def test_martin_translation():
    # f(G; x) = x * m(G; x+1)
    rng = random.Random(52)
    x = X({(1,): 1})
    x_plus_1 = X({(1,): 1, (0,): 1})
    for _ in range(20):
        g = random_2in2out(rng.randrange(1, 7), rng)
        f = circuit_partition_polynomial(g)
        m = martin_polynomial(g)
        assert x * m.subs_poly("x", x_plus_1) == f


def test_euler_circuit_digon_medial():
    g = digon_medial()
    circ = euler_circuit(g)
    check_circuit(g, circ)
    word = [g.arc(a)[1] for a in circ]
    assert sorted(word) == ["u", "u", "w", "w"]
    assert word[0] != word[1]  # forced alternation


def test_euler_circuit_two_loops():
    g = EulerDigraph.from_pairs([("v", "v"), ("v", "v")])
    circ = euler_circuit(g)
    assert sorted(circ) == ["a1", "a2"]
    d = chord_diagram_from_circuit(g, circ)
    assert d.word == ("v", "v")


def test_euler_circuit_validity_random():
    rng = random.Random(53)
    for _ in range(100):
        g = random_2in2out(rng.randrange(1, 8), rng)
        circ = euler_circuit(g)
        check_circuit(g, circ)  # raises on any defect
        d = chord_diagram_from_circuit(g, circ)
        assert len(d.word) == 2 * g.n  # double occurrence by construction


def test_euler_circuit_errors():
    with pytest.raises(ValueError):
        euler_circuit(EulerDigraph([], []))
    disconnected = EulerDigraph.from_pairs(
        [("a", "a"), ("a", "a"), ("b", "b"), ("b", "b")])
    with pytest.raises(ValueError):
        euler_circuit(disconnected)


def test_check_circuit_rejects_bad_input():
    g = digon_medial()
    circ = list(euler_circuit(g))
    with pytest.raises(ValueError):
        check_circuit(g, circ[:-1])
    with pytest.raises(ValueError):
        check_circuit(g, [circ[0], circ[0], circ[2], circ[3]])


def test_all_euler_circuits_vs_f1():
    # transition systems with one cycle are exactly the Euler circuits
    rng = random.Random(54)
    for _ in range(15):
        g = random_2in2out(rng.randrange(1, 6), rng)
        circuits = list(all_euler_circuits(g))
        f = circuit_partition_polynomial(g)
        assert len(circuits) == f.coefficient({"x": 1})
        for circ in circuits:
            check_circuit(g, circ)


def test_identity_digon_medial():
    rep = verify_circuit_partition_identity(digon_medial())
    assert rep.ok
    assert rep.f == X({(2,): 2, (1,): 2})


def test_identity_random_digraphs():
    rng = random.Random(55)
    for _ in range(25):
        g = random_2in2out(rng.randrange(1, 8), rng)
        assert verify_circuit_partition_identity(g, exhaustive=False).ok


def test_identity_exhaustive_circuit_independence():
    rng = random.Random(56)
    for _ in range(10):
        g = random_2in2out(rng.randrange(1, 6), rng)
        rep = verify_circuit_partition_identity(g, exhaustive=True)
        assert rep.ok and rep.circuits_checked >= 1
