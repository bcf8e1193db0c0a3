import json

import pytest

from contractads.qpoly import QPoly
from contractads.series import PowerSeries
from contractads.cli import (
    main,
    parse_graph_spec,
    qpoly_from_json,
    qpoly_to_json,
    series_from_json,
    series_to_json,
)
from contractads.graphs import canonical_key, complete_graph, cycle_graph, multipartite_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_graph_spec_parsing():
    assert canonical_key(parse_graph_spec("K4")) == canonical_key(complete_graph(4))
    assert canonical_key(parse_graph_spec("C6")) == canonical_key(cycle_graph(6))
    assert canonical_key(parse_graph_spec("K[2,2,1]")) == canonical_key(
        multipartite_graph((2, 2, 1))
    )
    inline = parse_graph_spec("n=3: 0-1, 1-2")
    assert inline.edges == frozenset({(0, 1), (1, 2)})
    with pytest.raises(ValueError):
        parse_graph_spec("Q7")


def test_hilbert_complex_k4(capsys):
    code, out, _ = run(capsys, "hilbert", "--target", "complex", "--graph", "K4")
    assert code == 0
    assert out.strip() == "1 + 5*q + q^2"


def test_hilbert_json_roundtrip(capsys):
    code, out, _ = run(capsys, "hilbert", "--target", "real", "--graph", "K3", "--json")
    assert code == 0
    assert qpoly_from_json(json.loads(out)) == QPoly.one() - QPoly.q()


def test_mobius_c5(capsys):
    code, out, _ = run(capsys, "mobius", "--graph", "C5")
    assert code == 0
    assert out.strip() == "4"


def test_chromatic(capsys):
    code, out, _ = run(capsys, "chromatic", "--graph", "P3")
    assert code == 0
    assert out.strip() == "q - 2*q^2 + q^3"


def test_series_closed_vs_recurrence(capsys):
    code1, out1, _ = run(
        capsys, "series", "--family", "path", "--target", "complex", "--order", "6", "--json"
    )
    code2, out2, _ = run(
        capsys,
        "series", "--family", "path", "--target", "complex", "--order", "6",
        "--from-recurrence", "--json",
    )
    assert code1 == code2 == 0
    assert series_from_json(json.loads(out1)) == series_from_json(json.loads(out2))


def test_young_command(capsys):
    code, out, _ = run(capsys, "young", "--target", "chromatic", "--degree", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    terms = {(t["z"], tuple(t["partition"])): qpoly_from_json(t["coefficient"]) for t in payload["terms"]}
    assert terms[(1, ())] == QPoly.q()  # chi(K_1) = q


def test_verify_suites_pass(capsys):
    for suite in ("koszul", "chromatic", "oracle", "composition"):
        code, out, err = run(capsys, "verify", "--suite", suite, "--max-vertices", "4")
        assert code == 0, (suite, err)
        assert "PASS" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "hilbert", "--target", "complex")
    assert code == 2
    assert "graph source" in err
    code, _, err = run(capsys, "hilbert", "--target", "complex", "--graph", "K4", "--graph6", "Bw")
    assert code == 2
    code, _, _ = run(capsys, "mobius", "--graph", "n=4: 0-1, 2-3")
    assert code == 2  # disconnected


def test_graph_file_source(tmp_path, capsys):
    path = tmp_path / "graph.txt"
    path.write_text("n=3\n0 1\n1 2\n")
    code, out, _ = run(capsys, "mobius", "--graph-file", str(path))
    assert code == 0
    assert out.strip() == "1"


def test_graph6_source(capsys):
    code, out, _ = run(capsys, "mobius", "--graph6", "Bw")
    assert code == 0
    assert out.strip() == "2"  # mu(K_3) = 2 in absolute value... sign included


def test_json_polynomial_roundtrip():
    p = QPoly({0: 1, 2: -5, 3: 7})
    assert qpoly_from_json(json.loads(json.dumps(qpoly_to_json(p)))) == p
    s = PowerSeries("t", 3, [QPoly.one(), QPoly.q(), QPoly.zero(), p])
    assert series_from_json(json.loads(json.dumps(series_to_json(s)))) == s
