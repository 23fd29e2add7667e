import json

import pytest

from chromexp import verify as verify_mod
from chromexp.cli import main
from chromexp.verify import VerifyResult


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_expand_pretty(capsys):
    code, out = run(capsys, "expand", "--dsl", "W(C(2),C(1))", "--pretty")
    assert code == 0
    assert out.strip() == "M(2,1) + M(3)"


def test_expand_json_structure(capsys):
    code, out = run(capsys, "expand", "--dsl", "K(2)", "--t")
    data = json.loads(out)
    assert code == 0
    assert data == {"degree": 2,
                    "terms": [{"composition": [1, 1], "coeff_t": [1, 1]}]}


def test_expand_is_deterministic(capsys):
    _, first = run(capsys, "expand", "--dsl", "D(C(2),S(C(1),C(1)))")
    _, second = run(capsys, "expand", "--dsl", "D(C(2),S(C(1),C(1)))")
    assert first == second


def test_expand_nc(capsys):
    code, out = run(capsys, "expand", "--nc", "--dsl", "S(C(1),C(1))", "--pretty")
    assert code == 0
    assert out.strip() == "M(1|2)"


def test_expand_sym_basis(capsys):
    code, out = run(capsys, "expand", "--dsl", "U(K(3))", "--basis", "sym:e", "--pretty")
    assert code == 0
    assert out.strip() == "6*e(3)"


def test_poly_eval_matches_worked_example(capsys):
    code, out = run(capsys, "poly", "--dsl", "U(K(3))", "--eval", "3")
    assert code == 0
    assert json.loads(out) == {"p": 3, "value": 6}


def test_poly_coefficients(capsys):
    code, out = run(capsys, "poly", "--dsl", "K(2)")
    assert json.loads(out) == {"coeffs_p": ["0/1", "-1/1", "1/1"]}
    assert code == 0


def test_combine_roundtrips_through_json(tmp_path, capsys):
    code, out = run(capsys, "combine", "--dsl", "S(C(2),C(1))")
    assert code == 0
    path = tmp_path / "g.json"
    path.write_text(out)
    code, out2 = run(capsys, "expand", "--json", str(path), "--pretty")
    assert code == 0
    assert out2.strip() == "M(2,1)"


def test_coproduct(capsys):
    code, out = run(capsys, "coproduct", "--dsl", "C(2)", "--pretty")
    assert code == 0
    assert out.strip() == "M() (x) M(2) + M(2) (x) M()"


def test_product_requires_two_inputs(capsys):
    code, _ = run(capsys, "product", "--dsl", "C(1)")
    assert code == 3


def test_product(capsys):
    code, out = run(capsys, "product", "--dsl", "C(1)", "--dsl", "C(1)", "--pretty")
    assert code == 0
    assert out.strip() == "2*M(1,1) + M(2)"


def test_verify_ok(capsys):
    code, out = run(capsys, "verify", "--suite", "tables", "--n", "3")
    data = json.loads(out)
    assert code == 0
    assert data["ok"] is True and data["checks"] > 0


def test_verify_failure_exits_one(monkeypatch, capsys):
    def broken(**kwargs):
        result = VerifyResult("oracle")
        result.fail(detail="synthetic failure", digraph={"n": 1, "edges": []})
        return result

    monkeypatch.setattr(verify_mod, "verify_oracle", broken)
    code, out = run(capsys, "verify", "--suite", "oracle")
    assert code == 1
    data = json.loads(out)
    assert data["ok"] is False
    assert data["counterexample"]["detail"] == "synthetic failure"


def test_bases_listing(capsys):
    code, out = run(capsys, "bases", "--space", "qsym", "--n", "3", "--kind", "M")
    data = json.loads(out)
    assert code == 0
    assert len(data["elements"]) == 4
    code, out = run(capsys, "bases", "--space", "qsym-r", "--n", "4", "--r", "2",
                    "--kind", "M")
    data = json.loads(out)
    assert len(data["elements"]) == 5  # (4),(2,2),(3|1),(2|11),(-|1111)
    code, out = run(capsys, "bases", "--space", "ncqsym", "--n", "2", "--kind", "F")
    assert len(json.loads(out)["elements"]) == 3


def test_mr(capsys):
    code, out = run(capsys, "mr", "836791524")
    data = json.loads(out)
    assert code == 0
    assert data["set_composition"] == [[8], [3, 6, 7, 9], [1, 5], [2, 4]]
    code, out = run(capsys, "mr", "2,1", "--pretty")
    assert out.startswith("F_(2|1)")


def test_balanced(tmp_path, capsys):
    path = tmp_path / "h.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    code, out = run(capsys, "balanced", "--graph", str(path), "--k", "1")
    data = json.loads(out)
    assert code == 0
    assert len(data["orientations"]) == 6
    assert data["xk"]["terms"] == [{"composition": [1, 1, 1], "coeff_t": [6]}]


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as err:
        main(["expand", "--bogus"])
    assert err.value.code == 2


def test_validation_error_exits_three(capsys):
    code, _ = run(capsys, "expand", "--dsl", "C(0)")
    assert code == 3
    code, _ = run(capsys, "expand")
    assert code == 3
