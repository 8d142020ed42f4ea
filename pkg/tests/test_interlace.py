import random

import pytest

from conftest import all_labeled_graphs, graph_with_extra
from graphpoly.graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph
from graphpoly.interlace import (CoefficientReport, coefficient_checks,
                                 gamma_invariant, interlace_summary,
                                 q_recursive, q_state_sum, qn_from_q,
                                 qn_recursive)
from graphpoly.poly import SparsePoly


def XY(terms):
    return SparsePoly(("x", "y"), terms)


def X(terms):
    return SparsePoly(("x",), terms)


def _random_graph(rng, n, p=0.5, loop_p=0.0):
    vs = [str(i) for i in range(1, n + 1)]
    edges = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if rng.random() < p]
    edges += [(v, v) for v in vs if rng.random() < loop_p]
    return Graph.from_edges(edges, vs)


# -- state sum values ------------------------------------------------------------


def test_q_edgeless_is_power_of_y():
    for n in range(5):
        assert q_state_sum(Graph.edgeless(n)) == XY({(0, n): 1})


def test_q_k2():
    assert q_state_sum(complete_graph(2)) == XY({(2, 0): 1, (1, 0): -2, (0, 1): 2})


def test_q_single_looped_vertex():
    # empty subset contributes 1, the looped vertex has rank 1, so q = x
    g = Graph.from_edges([("a", "a")])
    assert q_state_sum(g) == XY({(1, 0): 1})
    assert q_recursive(g) == XY({(1, 0): 1})


def test_q_recursive_base_cases():
    assert q_recursive(Graph.edgeless(2)) == XY({(0, 2): 1})
    assert q_recursive(complete_graph(2)) == XY({(2, 0): 1, (1, 0): -2, (0, 1): 2})


def test_q_recursive_matches_state_sum_small_exhaustive():
    for n in range(5):
        for g in all_labeled_graphs(n):
            assert q_recursive(g) == q_state_sum(g)


def test_q_routes_agree_with_loops_both_orders():
    rng = random.Random(11)
    for _ in range(60):
        g = _random_graph(rng, rng.randrange(1, 7), loop_p=0.4)
        expected = q_state_sum(g)
        assert q_recursive(g) == expected
        assert q_recursive(g, prefer_loop=True) == expected


def test_qn_edgeless():
    for n in range(5):
        assert qn_recursive(Graph.edgeless(n)) == X({(n,): 1})


def test_qn_c6_known_value():
    assert qn_recursive(cycle_graph(6)) == X({(3,): 2, (2,): 10, (1,): 4})


def test_qn_k3():
    assert qn_recursive(complete_graph(3)) == X({(1,): 4})


def test_qn_from_q_examples():
    assert qn_from_q(complete_graph(2)) == X({(1,): 2})
    assert qn_from_q(Graph.edgeless(3)) == X({(3,): 1})
    assert qn_from_q(path_graph(3)) == X({(2,): 1, (1,): 2})


def test_qn_requires_simple():
    g = Graph.from_edges([("a", "a")])
    with pytest.raises(ValueError):
        qn_recursive(g)
    with pytest.raises(ValueError):
        gamma_invariant(g)


def test_gamma_examples():
    assert gamma_invariant(complete_graph(2)) == 2
    for m in range(1, 6):
        assert gamma_invariant(star_graph(m)) == 2
    assert gamma_invariant(cycle_graph(6)) == 4
    assert gamma_invariant(Graph.edgeless(1)) == 1
    assert gamma_invariant(Graph.edgeless(2)) == 0


# -- coefficient identities ---------------------------------------------------------


def test_coefficient_checks_k2():
    rep = coefficient_checks(complete_graph(2))
    assert rep.a10 == -2 and rep.a01 == 2 and rep.ok


def test_coefficient_checks_e2():
    rep = coefficient_checks(Graph.edgeless(2))
    assert rep.a10 == 0 and rep.a01 == 0 and rep.ok


def test_coefficient_checks_c6():
    rep = coefficient_checks(cycle_graph(6))
    assert rep.a1 == 4 and rep.ok
    assert isinstance(rep, CoefficientReport)


# -- structural identities ------------------------------------------------------------


def test_pivot_invariance_of_qn():
    rng = random.Random(21)
    for _ in range(60):
        g = _random_graph(rng, rng.randrange(2, 8))
        if not g.edges():
            continue
        u, v = rng.choice(g.edges())
        assert qn_from_q(g) == qn_from_q(g.pivot(u, v))


def test_multiplicative_on_disjoint_unions():
    rng = random.Random(22)
    for _ in range(40):
        g = _random_graph(rng, rng.randrange(1, 5))
        h = _random_graph(rng, rng.randrange(1, 5))
        u = g.disjoint_union(h)
        assert qn_from_q(u) == qn_from_q(g) * qn_from_q(h)
        assert q_state_sum(u) == q_state_sum(g) * q_state_sum(h)


def test_qn_positive_coefficients():
    rng = random.Random(23)
    for _ in range(60):
        g = _random_graph(rng, rng.randrange(1, 8))
        assert all(c > 0 for c in qn_from_q(g).terms.values())


def test_lowest_degree_counts_components():
    rng = random.Random(24)
    for _ in range(60):
        g = _random_graph(rng, rng.randrange(1, 8), p=0.3)
        assert qn_from_q(g).min_total_degree() == len(g.components())


def test_gamma_zero_iff_disconnected_and_cut_vertices():
    rng = random.Random(25)
    for _ in range(40):
        g = _random_graph(rng, rng.randrange(2, 8), p=0.4)
        assert (gamma_invariant(g) == 0) == (len(g.components()) > 1)
        if g.is_connected() and g.n >= 2:
            for v in g.ids:
                cut = len(g.without(v).components()) > 1
                assert (gamma_invariant(g.without(v)) == 0) == cut


def test_isolated_vertex_multiplies_q_by_y():
    rng = random.Random(26)
    y = SparsePoly(("x", "y"), {(0, 1): 1})
    for _ in range(20):
        g = _random_graph(rng, rng.randrange(1, 6))
        gi = Graph.from_edges(g.edges(), list(g.ids) + ["iso"])
        assert q_state_sum(gi) == y * q_state_sum(g)


# -- vertex addition reductions -------------------------------------------------------


def _pendant(g, at):
    return graph_with_extra(g, "w+", [at])


def _false_twin(g, of):
    return graph_with_extra(g, "w+", [v for v in g.neighbors(of) if v != str(of)])


def _true_twin(g, of):
    return graph_with_extra(g, "w+", list(g.neighbors(of)) + [str(of)])


def test_pendant_reduction_formula():
    # q(G') = q(G) + (x^2 - 2x + y) q(G - u)
    rng = random.Random(31)
    factor = SparsePoly(("x", "y"), {(2, 0): 1, (1, 0): -2, (0, 1): 1})
    for _ in range(60):
        g = _random_graph(rng, rng.randrange(1, 7))
        u = rng.choice(g.ids)
        gp = _pendant(g, u)
        assert q_state_sum(gp) == q_state_sum(g) + factor * q_state_sum(g.without(u))


def test_false_twin_reduction_formula():
    # q(G'') = q(G) + y (q(G) - q(G - v)), v not isolated
    rng = random.Random(32)
    y = SparsePoly(("x", "y"), {(0, 1): 1})
    done = 0
    while done < 60:
        g = _random_graph(rng, rng.randrange(2, 7))
        cands = [v for v in g.ids if g.degree(v) > 0]
        if not cands:
            continue
        v = rng.choice(cands)
        gf = _false_twin(g, v)
        q = q_state_sum(g)
        assert q_state_sum(gf) == q + y * (q - q_state_sum(g.without(v)))
        done += 1


def test_true_twin_reduction_formula():
    # q(G''') = 2 q(G) + ((x-1)^2 - 1) q(G - v), v not isolated
    rng = random.Random(33)
    factor = SparsePoly(("x", "y"), {(2, 0): 1, (1, 0): -2})
    done = 0
    while done < 60:
        g = _random_graph(rng, rng.randrange(2, 7))
        cands = [v for v in g.ids if g.degree(v) > 0]
        if not cands:
            continue
        v = rng.choice(cands)
        gt = _true_twin(g, v)
        assert q_state_sum(gt) == 2 * q_state_sum(g) + factor * q_state_sum(g.without(v))
        done += 1


def test_qn_duality_identities():
    # pendant: q_N(G') = q_N(G) + x q_N(G-u); false twin via the pivoted form;
    # true twin doubles q_N
    rng = random.Random(34)
    x = SparsePoly(("x",), {(1,): 1})
    done = 0
    while done < 60:
        g = _random_graph(rng, rng.randrange(2, 7))
        u = rng.choice(g.ids)
        gp = _pendant(g, u)
        assert qn_from_q(gp) == qn_from_q(g) + x * qn_from_q(g.without(u))
        nonisolated = [v for v in g.ids if g.degree(v) > 0]
        if not nonisolated:
            continue
        v = rng.choice(nonisolated)
        gt = _true_twin(g, v)
        assert qn_from_q(gt) == 2 * qn_from_q(g)
        gf = _false_twin(g, v)
        u2 = rng.choice(list(g.neighbors(v)))
        piv = g.pivot(u2, v)
        assert qn_from_q(gf) == qn_from_q(g) + x * qn_from_q(piv.without(u2))
        done += 1


def test_join_gamma_identities():
    # 2 gamma(join) = gamma(G) gamma(F) for one and two point joins
    rng = random.Random(35)
    done = 0
    while done < 60:
        g = _random_graph(rng, rng.randrange(2, 6), p=0.6)
        h = _random_graph(rng, rng.randrange(2, 6), p=0.6)
        gu = [v for v in g.ids if g.degree(v) > 0]
        hv = [v for v in h.ids if h.degree(v) > 0]
        if not gu or not hv:
            continue
        u, v = rng.choice(gu), rng.choice(hv)
        j1 = g.one_point_join(u, h, v)
        assert 2 * gamma_invariant(j1) == gamma_invariant(g) * gamma_invariant(h)
        j2 = g.two_point_join(u, h, v)
        assert 2 * gamma_invariant(j2) == gamma_invariant(g) * gamma_invariant(h)
        done += 1


def test_interlace_summary_bundle():
    res = interlace_summary(complete_graph(2))
    assert res.gamma == 2
    assert res.q is not None and res.qn is not None
    assert res.method == "state-sum"
