import random

from chromexp.chromatic import chromatic_number, expand
from chromexp.combinat import compositions, set_compositions
from chromexp.graph import atom, labelled, make
from chromexp.ncqsym import basis_nc, expand_nc
from chromexp.oracle import (
    TruncPoly,
    WordPoly,
    assert_equal,
    count_colourings,
    direct_expand,
    direct_expand_nc,
    realize,
    realize_nc,
)
from chromexp.qsym import basis_F, basis_M
from chromexp.tpoly import TPoly

TRIANGLE = make(3, [(0, 1, "neq"), (1, 2, "lt"), (2, 0, "leq")])


def random_digraph(rng, max_n):
    n = rng.randint(1, max_n)
    edges = [(u, v, rng.choice(("neq", "lt", "leq")))
             for u in range(n) for v in range(n)
             if u != v and rng.random() < 0.45]
    return make(n, edges)


def test_realize_monomials():
    assert realize(basis_M((2,)), 2) == TruncPoly(2, {(2, 0): 1, (0, 2): 1})
    assert realize(basis_M((1, 1)), 2) == TruncPoly(2, {(1, 1): 1})


def test_realize_nc_orders_blocks():
    f = basis_nc("M", ((2,), (1,)))
    assert realize_nc(f, 2) == WordPoly(2, {(2, 1): 1})


def test_direct_expand_contains_figure_colouring():
    got = direct_expand(TRIANGLE, 2)
    # the colouring (2,1,2) contributes t * x_1 x_2^2
    assert got.terms.get((1, 2)) == TPoly.t_power(1)


def test_direct_expand_below_chromatic_number_is_zero():
    g = atom("K", 3)
    assert chromatic_number(g) == 3
    assert not direct_expand(g, 2)


def test_direct_expand_cycle_diagonal():
    got = direct_expand(atom("C", 3), 3)
    assert got == TruncPoly(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})


def test_realize_matches_direct_randomly():
    rng = random.Random(7)
    for _ in range(40):
        g = random_digraph(rng, 5)
        for k in range(1, g.n + 1):
            report = assert_equal(realize(expand(g), k), direct_expand(g, k))
            assert report.ok, report.detail


def test_realize_is_multiplicative():
    f, g = basis_F((2,)), basis_M((1, 1))
    for k in (4, 5):
        assert realize(f * g, k) == realize(f, k) * realize(g, k)


def test_zero_equals_zero():
    a = TruncPoly(3)
    b = TruncPoly(3)
    assert assert_equal(a, b).ok


def test_assert_equal_reports_first_difference():
    a = TruncPoly(2, {(1, 0): 1})
    b = TruncPoly(2, {(1, 0): TPoly((1, 1))})
    report = assert_equal(a, b)
    assert not report.ok
    assert "(1, 0)" in report.detail
    mismatch = assert_equal(a, WordPoly(2, {(1,): 1}))
    assert not mismatch.ok and "kind" in mismatch.detail


def test_realization_is_faithful_at_degree_many_variables():
    for n in range(1, 5):
        seen = {}
        for alpha in compositions(n):
            key = tuple(sorted(realize(basis_M(alpha), n).terms))
            assert key not in seen, (alpha, seen[key])
            seen[key] = alpha
        seen_nc = {}
        for phi in set_compositions(n):
            key = tuple(sorted(realize_nc(basis_nc("M", phi), n).terms))
            assert key not in seen_nc, (phi, seen_nc[key])
            seen_nc[key] = phi


def test_direct_expand_nc_matches_symbolic():
    lg = labelled(make(2, [(0, 1, "lt")]), (2, 1))
    report = assert_equal(realize_nc(expand_nc(lg), 2), direct_expand_nc(lg, 2))
    assert report.ok, report.detail


def test_count_colourings():
    assert count_colourings(atom("K", 3), 3) == 6
    assert count_colourings(atom("C", 4), 5) == 5
    assert count_colourings(make(0), 0) == 1
    assert count_colourings(make(1), 0) == 0


def test_word_poly_concatenation():
    a = WordPoly(2, {(1,): 1})
    b = WordPoly(2, {(2,): TPoly((0, 1))})
    assert a * b == WordPoly(2, {(1, 2): TPoly((0, 1))})
