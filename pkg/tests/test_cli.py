import json

import pytest

from ncgeode.cli import main
from ncgeode.lagrange import g_t, geode, solve_g
from ncgeode.render import series_from_json, series_to_json_dict
from ncgeode.schroeder import g_e


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_expand_gamma_text(capsys):
    code, out = run_cli(capsys, "expand", "--series", "gamma", "--degree", "3")
    assert code == 0
    assert out.splitlines() == [
        "gamma_0 = 1",
        "gamma_1 = S_1",
        "gamma_2 = 2S_2 + S^{11}",
        "gamma_3 = 3S_3 + 3S^{21} + 2S^{12} + S^{111}",
    ]


def test_expand_gamma_ribbon(capsys):
    code, out = run_cli(capsys, "expand", "--series", "gamma", "--degree", "3",
                        "--basis", "R")
    assert code == 0
    assert out.splitlines()[-1] == "gamma_3 = 9R_{3} + 4R_{21} + 3R_{12} + R_{111}"


def test_expand_degree_zero(capsys):
    code, out = run_cli(capsys, "expand", "--series", "g", "--degree", "0")
    assert code == 0
    assert out.strip() == "g_0 = 1"


def test_expand_polyt(capsys):
    code, out = run_cli(capsys, "expand", "--series", "h", "--degree", "3",
                        "--ring", "polyt")
    assert code == 0
    assert out.splitlines()[-1] == "h_3 = S_3 + tS^{21}"


def test_expand_is_deterministic(capsys):
    _, first = run_cli(capsys, "expand", "--series", "gessel", "--degree", "5")
    _, second = run_cli(capsys, "expand", "--series", "gessel", "--degree", "5")
    assert first == second


def test_json_round_trip(capsys):
    code, out = run_cli(capsys, "expand", "--series", "g", "--degree", "4",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert series_from_json(data) == solve_g(4)


def test_json_round_trip_polyt(capsys):
    code, out = run_cli(capsys, "expand", "--series", "g", "--degree", "3",
                        "--ring", "polyt", "--format", "json")
    assert code == 0
    assert series_from_json(json.loads(out)) == g_t(3)


def test_json_round_trip_epoly():
    data = series_to_json_dict(g_e(3), "ge")
    assert series_from_json(json.loads(json.dumps(data))) == g_e(3)


def test_klagrange_routes(capsys):
    for route in ("direct", "phi", "delta"):
        code, out = run_cli(capsys, "klagrange", "--k", "2", "--degree", "3",
                            "--route", route)
        assert code == 0
        assert out.splitlines()[2] == "g^(2)_2 = S_2 + 2S^{11}"


def test_klagrange_negative(capsys):
    code, out = run_cli(capsys, "klagrange", "--k", "-1", "--degree", "2")
    assert code == 0
    assert out.splitlines()[-1] == "g^(-1)_2 = S_2 - S^{11}"


def test_trees_lukasiewicz(capsys):
    code, out = run_cli(capsys, "trees", "--kind", "lukasiewicz", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["3000", "2100", "2010", "1200", "1110", "count: 5"]


def test_trees_prime_schroeder(capsys):
    code, out = run_cli(capsys, "trees", "--kind", "prime-schroeder", "--n", "3")
    assert code == 0
    assert out.splitlines()[-1] == "count: 6"


def test_trees_schroeder(capsys):
    code, out = run_cli(capsys, "trees", "--kind", "schroeder", "--n", "2")
    assert code == 0
    assert out.splitlines() == ["2000", "11000", "10100", "count: 3"]


def test_trees_pqr(capsys):
    code, out = run_cli(capsys, "trees", "--kind", "pqr", "--shape", "3,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "111|2"
    assert lines[-1] == "count: 9"
    assert "113|4" in lines


def test_trees_json(capsys):
    code, out = run_cli(capsys, "trees", "--kind", "lukasiewicz", "--n", "2",
                        "--format", "json")
    data = json.loads(out)
    assert data["count"] == 2
    assert data["items"] == [[2, 0, 0], [1, 1, 0]]


def test_specialize_coeff_sum(capsys):
    code, out = run_cli(capsys, "specialize", "--map", "coeff-sum",
                        "--series", "gamma", "--order", "7")
    assert code == 0
    assert out.strip() == "1, 1, 3, 9, 28, 90, 297, 1001"


def test_specialize_zq_requires_eseries(capsys):
    code = main(["specialize", "--map", "zq", "--series", "g", "--order", "4"])
    capsys.readouterr()
    assert code == 2


def test_eseries(capsys):
    code, out = run_cli(capsys, "eseries", "--series", "g", "--degree", "3")
    assert code == 0
    assert out.splitlines()[-1] == \
        "g^[e]_3 = S_3 + 2e_1S^{21} + e_1S^{12} + (e_{11}+e_2)S^{111}"


def test_verify_suites(capsys):
    for suite in ("oeis", "identities"):
        code, out = run_cli(capsys, "verify", "--suite", suite, "--degree", "4")
        assert code == 0, out
        assert "overall: PASS" in out


def test_verify_paper_reports_three_deviations(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "paper", "--degree", "4")
    assert code == 0, out
    assert out.count("documented deviation") == 3


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--series", "nonsense", "--degree", "3"])
    assert exc.value.code == 2
    capsys.readouterr()
    code = main(["expand", "--series", "gessel", "--degree", "3",
                 "--ring", "polyt"])
    capsys.readouterr()
    assert code == 2
    code = main(["trees", "--kind", "lukasiewicz"])
    capsys.readouterr()
    assert code == 2
