import json

import pytest

from graphpoly.cli import main

C6 = "".join(f"{i} {i % 6 + 1}\n" for i in range(1, 7))


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "c6.edges": C6,
        "k2.edges": "a b\n",
        "k3.edges": "a b\nb c\nc a\n",
        "digon.sp": "digon\n",
        "c3.sp": "digon\nseries e2\n",
        "digon.arcs": "u -> w\nu -> w\nw -> u\nw -> u\n",
        "multi.edges": "u v\nu v\n",
        "bad.edges": "x y z\n",
    }.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_qn_c6(files, capsys):
    code, out, _ = run(capsys, "qn", "--edges", files["c6.edges"])
    assert code == 0 and out == "2*x^3 + 10*x^2 + 4*x"


def test_qn_methods_agree(files, capsys):
    results = set()
    for method in ("recursion", "specialize"):
        code, out, _ = run(capsys, "qn", "--edges", files["c6.edges"], "--method", method)
        assert code == 0
        results.add(out)
    assert len(results) == 1


def test_qn_bdh_fast_on_non_bdh_is_usage_error(files, capsys):
    code, _, err = run(capsys, "qn", "--edges", files["k3.edges"], "--method", "bdh-fast")
    assert code == 2 and "true twin" in err


def test_gamma_k2(files, capsys):
    code, out, _ = run(capsys, "gamma", "--edges", files["k2.edges"])
    assert code == 0 and out == "2"


def test_q_both_methods(files, capsys):
    code, out, _ = run(capsys, "q", "--edges", files["k2.edges"])
    assert code == 0 and out == "x^2 - 2*x + 2*y"
    code, out2, _ = run(capsys, "q", "--edges", files["k2.edges"], "--method", "recursion")
    assert code == 0 and out2 == out


def test_tutte_multigraph(files, capsys):
    code, out, _ = run(capsys, "tutte", "--edges", files["multi.edges"])
    assert code == 0 and out == "x + y"


def test_tutte_diag_sp(files, capsys):
    code, out, _ = run(capsys, "tutte-diag-sp", "--sp", files["c3.sp"])
    assert code == 0 and out == "x^2 + 2*x"


def test_beta(files, capsys):
    code, out, _ = run(capsys, "beta", "--edges", files["multi.edges"])
    assert code == 0 and out == "1"


def test_cpp(files, capsys):
    code, out, _ = run(capsys, "cpp", "--arcs", files["digon.arcs"])
    assert code == 0 and out == "2*x^2 + 2*x"


def test_euler_circuit(files, capsys):
    code, out, _ = run(capsys, "euler-circuit", "--arcs", files["digon.arcs"])
    assert code == 0 and "a1" in out


def test_circle_graph_word(capsys):
    code, out, _ = run(capsys, "circle-graph", "--word", "1 2 1 3 2 3")
    assert code == 0 and set(out.splitlines()) == {"1 2", "2 3"}


def test_circle_graph_from_arcs(files, capsys):
    code, out, _ = run(capsys, "circle-graph", "--arcs", files["digon.arcs"])
    assert code == 0 and out == "u w"


def test_medial(files, capsys):
    code, out, _ = run(capsys, "medial", "--sp", files["digon.sp"])
    assert code == 0
    assert sorted(out.splitlines()) == ["e1 -> e2", "e1 -> e2", "e2 -> e1", "e2 -> e1"]


def test_dh_recognize_accept(files, capsys):
    code, out, _ = run(capsys, "dh", "recognize", "--edges", files["k3.edges"])
    assert code == 0 and out.startswith("root")


def test_dh_recognize_reject_exits_1(files, capsys):
    code, out, _ = run(capsys, "dh", "recognize", "--edges", files["c6.edges"])
    assert code == 1 and "not distance-hereditary" in out


def test_dh_is_bdh(files, capsys):
    code, out, _ = run(capsys, "dh", "is-bdh", "--edges", files["k2.edges"])
    assert code == 0 and out.startswith("yes")
    code, out, _ = run(capsys, "dh", "is-bdh", "--edges", files["k3.edges"])
    assert code == 1 and out.startswith("no")


def test_dh_to_sp(files, capsys):
    code, out, _ = run(capsys, "dh", "to-sp", "--edges", files["k2.edges"])
    assert code == 0 and out.splitlines()[0] == "digon"


def test_verify_theorem_b_single(files, capsys):
    code, out, _ = run(capsys, "verify", "theorem-b", "--sp", files["digon.sp"])
    assert code == 0 and "2*x" in out


def test_verify_random_suites(files, capsys):
    assert run(capsys, "verify", "theorem-a", "--seed", "3", "--count", "5")[0] == 0
    assert run(capsys, "verify", "theorem-b", "--seed", "3", "--count", "5",
               "--max-size", "6")[0] == 0
    assert run(capsys, "verify", "cpoly", "--seed", "3", "--count", "5")[0] == 0
    assert run(capsys, "verify", "identities", "--seed", "3", "--count", "10")[0] == 0


def test_verify_requires_seed(capsys):
    code, _, err = run(capsys, "verify", "identities")
    assert code == 2 and "--seed" in err


def test_format_error_exits_2(files, capsys):
    code, _, err = run(capsys, "qn", "--edges", files["bad.edges"])
    assert code == 2 and "line 1" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "qn", "--edges", "/nonexistent/file.edges")
    assert code == 2 and "cannot read" in err


def test_unknown_flag_exits_2(files, capsys):
    assert run(capsys, "qn", "--edges", files["k2.edges"], "--bogus")[0] == 2


def test_json_output(files, capsys):
    code, out, _ = run(capsys, "--format", "json", "qn", "--edges", files["c6.edges"])
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"input", "method", "result", "elapsed_ms"}
    assert doc["method"] == "recursion"
    assert {"exps": {"x": 3}, "coeff": "2"} in doc["result"]


def test_json_and_text_agree(files, capsys):
    _, text_out, _ = run(capsys, "qn", "--edges", files["c6.edges"])
    _, json_out, _ = run(capsys, "--format", "json", "qn", "--edges", files["c6.edges"])
    from graphpoly.poly import SparsePoly
    poly = SparsePoly.from_json_obj(("x",), json.loads(json_out)["result"])
    assert str(poly) == text_out
