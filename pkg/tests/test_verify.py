import random

from chromexp.graph import digraph_to_json
from chromexp.verify import (
    SUITES,
    VerifyResult,
    random_digraph,
    random_labelled_digraph,
    verify_hopf,
    verify_oracle,
    verify_r_closure,
    verify_tables,
)


def test_random_digraphs_are_seed_deterministic():
    a = [digraph_to_json(random_digraph(random.Random(42), 5)) for _ in range(5)]
    b = [digraph_to_json(random_digraph(random.Random(42), 5)) for _ in range(5)]
    assert a == b
    la = random_labelled_digraph(random.Random(7), 4)
    lb = random_labelled_digraph(random.Random(7), 4)
    assert la == lb


def test_suite_registry():
    assert set(SUITES) == {"oracle", "hopf", "tables", "r-closure"}


def test_small_suites_pass():
    assert verify_oracle(trials=10, max_n=3, seed=1).ok
    assert verify_hopf(trials=3, max_n=3, seed=1).ok
    assert verify_tables(n=2, sym_n=2).ok
    assert verify_r_closure(n_qsym=3, n_nc=3, r=2, seed=1, trials=3).ok


def test_result_json_shape():
    result = verify_tables(n=1, sym_n=1)
    data = result.to_json()
    assert data["suite"] == "tables"
    assert data["ok"] is True
    assert data["counterexample"] is None
    assert data["checks"] == result.checks > 0


def test_fail_records_first_counterexample_only():
    result = VerifyResult("oracle")
    result.fail(detail="first")
    result.fail(detail="second")
    assert result.counterexample["detail"] == "first"
    assert not result.ok
