"""Seeded verification suites behind the command-line `verify`
subcommand: oracle agreement, the Hopf identities, the basis tables,
and the r-level closure. Each suite returns a result object carrying a
machine-readable counterexample when something fails."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import chromatic, combinat, graph as gr, ncqsym, oracle, qsym
from .combinat import (
    compositions,
    coarsenings,
    partitions,
    r_compositions,
    r_set_compositions,
    set_compositions,
    set_partitions,
    shape_partition,
    lambda_factorial,
    lambda_superfactorial,
)
from .graph import digraph_to_json
from .linalg import exact_rank
from .qsym import QSymExpr, coproduct
from .ncqsym import (
    NCQSymExpr,
    RegroupError,
    basis_nc,
    basis_ncr,
    basis_ncsym,
    basis_ncsym_e_paths,
    coproduct_nc,
    expand_nc,
    ncsym_h_meet,
    ncsym_m_expr,
    r_regroup,
    r_regroup_tensor,
    rho,
)
@dataclass
class VerifyResult:
    suite: str
    ok: bool = True
    checks: int = 0
    counterexample: dict | None = None
    notes: list = field(default_factory=list)

    def fail(self, **info):
        if self.ok:
            self.ok = False
            self.counterexample = {"suite": self.suite, **info}

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": self.checks,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }


# ---------------------------------------------------------------------------
# seeded random inputs

CONSTRAINTS = ("neq", "lt", "leq")


def random_digraph(rng: random.Random, max_n: int, min_n: int = 1,
                   edge_prob: float = 0.45) -> gr.EdgeColouredDigraph:
    n = rng.randint(min_n, max_n)
    edges = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < edge_prob:
                edges.append((u, v, rng.choice(CONSTRAINTS)))
    return gr.make(n, edges)


def random_labelled_digraph(rng: random.Random, max_n: int,
                            min_n: int = 1) -> gr.LabelledDigraph:
    g = random_digraph(rng, max_n, min_n)
    labels = list(range(1, g.n + 1))
    rng.shuffle(labels)
    return gr.labelled(g, labels)


# ---------------------------------------------------------------------------
# oracle agreement

def verify_oracle(trials: int = 200, max_n: int = 5, seed: int = 0) -> VerifyResult:
    """Symbolic expansion versus literal colouring enumeration, with the
    full t-grading, in both commuting and noncommuting variables."""
    result = VerifyResult("oracle")
    rng = random.Random(seed)
    for trial in range(trials):
        g = random_digraph(rng, max_n)
        k = g.n
        report = oracle.assert_equal(oracle.realize(chromatic.expand(g), k),
                                     oracle.direct_expand(g, k))
        result.checks += 1
        if not report.ok:
            result.fail(trial=trial, seed=seed, digraph=digraph_to_json(g),
                        detail=report.detail)
            return result
        if trial % 4 == 0:
            lg = random_labelled_digraph(rng, max_n)
            report = oracle.assert_equal(
                oracle.realize_nc(expand_nc(lg), lg.graph.n),
                oracle.direct_expand_nc(lg, lg.graph.n))
            result.checks += 1
            if not report.ok:
                result.fail(trial=trial, seed=seed, digraph=digraph_to_json(lg),
                            detail=report.detail)
                return result
    return result


# ---------------------------------------------------------------------------
# Hopf identities

def _triple_splits_qsym(tensor, apply_left):
    out: dict = {}
    for (a, b), coeff in tensor.terms.items():
        target, fixed = (a, b) if apply_left else (b, a)
        for i in range(len(target) + 1):
            pieces = (target[:i], target[i:], fixed) if apply_left \
                else (fixed, target[:i], target[i:])
            qsym._merge(out, pieces, coeff)
    return out


def _triple_splits_nc(tensor, apply_left):
    out: dict = {}
    std = combinat.standardize_set_composition
    for (a, b), coeff in tensor.terms.items():
        target, fixed = (a, b) if apply_left else (b, a)
        for i in range(len(target) + 1):
            first, second = std(target[:i]), std(target[i:])
            pieces = (first, second, fixed) if apply_left else (fixed, first, second)
            qsym._merge(out, pieces, coeff)
    return out


def _counit_legs(tensor, empty_key=()):
    left = {}
    right = {}
    for (a, b), coeff in tensor.terms.items():
        if a == empty_key:
            qsym._merge(right, b, coeff)
        if b == empty_key:
            qsym._merge(left, a, coeff)
    return left, right


def verify_hopf(trials: int = 50, max_n: int = 4, seed: int = 0) -> VerifyResult:
    """Product and coproduct identities, digraph side against algebra
    side, plus coassociativity, compatibility, and the counit."""
    result = VerifyResult("hopf")
    rng = random.Random(seed)
    for trial in range(trials):
        g1 = random_digraph(rng, max_n)
        g2 = random_digraph(rng, max_n)
        f1, f2 = chromatic.expand(g1), chromatic.expand(g2)
        result.checks += 1
        if f1 * f2 != chromatic.expand(gr.combine("disjoint", g1, g2)):
            result.fail(identity="product", trial=trial, seed=seed,
                        digraph=digraph_to_json(g1), other=digraph_to_json(g2))
            return result

        lg1 = random_labelled_digraph(rng, max_n)
        lg2 = random_labelled_digraph(rng, max_n)
        y1, y2 = expand_nc(lg1), expand_nc(lg2)
        result.checks += 1
        if y1 * y2 != expand_nc(gr.combine_labelled("disjoint", lg1, lg2, shift=True)):
            result.fail(identity="nc-product", trial=trial, seed=seed,
                        digraph=digraph_to_json(lg1), other=digraph_to_json(lg2))
            return result

        g = random_digraph(rng, max_n)
        result.checks += 1
        if chromatic.coproduct_digraph(g) != coproduct(chromatic.expand(g).at_t(1)):
            result.fail(identity="coproduct", trial=trial, seed=seed,
                        digraph=digraph_to_json(g))
            return result

        lg = random_labelled_digraph(rng, max_n)
        result.checks += 1
        if ncqsym.coproduct_nc_digraph(lg) != coproduct_nc(expand_nc(lg).at_t(1)):
            result.fail(identity="nc-coproduct", trial=trial, seed=seed,
                        digraph=digraph_to_json(lg))
            return result

        # coassociativity, compatibility, counit on the same samples
        f = chromatic.expand(g).at_t(1)
        delta = coproduct(f)
        result.checks += 1
        if _triple_splits_qsym(delta, True) != _triple_splits_qsym(delta, False):
            result.fail(identity="coassociativity", trial=trial, seed=seed,
                        digraph=digraph_to_json(g))
            return result
        left, right = _counit_legs(delta)
        result.checks += 1
        if QSymExpr(left) != f or QSymExpr(right) != f:
            result.fail(identity="counit", trial=trial, seed=seed,
                        digraph=digraph_to_json(g))
            return result
        pair = f1.at_t(1), f2.at_t(1)
        result.checks += 1
        if coproduct(pair[0] * pair[1]) != coproduct(pair[0]) * coproduct(pair[1]):
            result.fail(identity="bialgebra", trial=trial, seed=seed,
                        digraph=digraph_to_json(g1), other=digraph_to_json(g2))
            return result

        y = expand_nc(lg).at_t(1)
        delta_nc = coproduct_nc(y)
        result.checks += 1
        if _triple_splits_nc(delta_nc, True) != _triple_splits_nc(delta_nc, False):
            result.fail(identity="nc-coassociativity", trial=trial, seed=seed,
                        digraph=digraph_to_json(lg))
            return result
        pair = y1.at_t(1), y2.at_t(1)
        result.checks += 1
        if coproduct_nc(pair[0] * pair[1]) != coproduct_nc(pair[0]) * coproduct_nc(pair[1]):
            result.fail(identity="nc-bialgebra", trial=trial, seed=seed,
                        digraph=digraph_to_json(lg1), other=digraph_to_json(lg2))
            return result

        # the commutation map is an algebra map
        result.checks += 1
        if rho(y1 * y2) != rho(y1) * rho(y2):
            result.fail(identity="rho-algebra-map", trial=trial, seed=seed,
                        digraph=digraph_to_json(lg1), other=digraph_to_json(lg2))
            return result
    return result


# ---------------------------------------------------------------------------
# the basis tables

def _immaculate_contents(alpha, row_strict: bool) -> dict[tuple, int]:
    """Tableau oracle for the composition grids: fillings of the diagram
    of alpha, rows weakly increasing and first column strictly increasing
    (roles swapped when row_strict), counted per content."""
    n = sum(alpha)
    cells = [(i, j) for i, row in enumerate(alpha) for j in range(row)]
    counts: dict[tuple, int] = {}
    if n == 0:
        return {(): 1}
    filling: dict = {}

    def admissible(i, j, value):
        if j > 0:
            prev = filling[(i, j - 1)]
            if (value <= prev) if row_strict else (value < prev):
                return False
        if i > 0 and j == 0:
            above = filling[(i - 1, 0)]
            if (value < above) if row_strict else (value <= above):
                return False
        return True

    def rec(idx):
        if idx == len(cells):
            content = [0] * max(filling.values())
            for v in filling.values():
                content[v - 1] += 1
            if all(content):
                key = tuple(content)
                counts[key] = counts.get(key, 0) + 1
            return
        i, j = cells[idx]
        for value in range(1, n + 1):
            if admissible(i, j, value):
                filling[(i, j)] = value
                rec(idx + 1)
                del filling[(i, j)]

    rec(0)
    return counts


def _ncsym_p_expr(pi, n) -> NCQSymExpr:
    """Power-sum element directly: M over set compositions whose blocks
    absorb every block of pi whole."""
    terms = {}
    for phi in set_compositions(n):
        lookup = {}
        for idx, block in enumerate(phi):
            for x in block:
                lookup[x] = idx
        if all(len({lookup[x] for x in block}) == 1 for block in pi):
            terms[phi] = 1
    return NCQSymExpr(terms)


def _ncsym_e_expr(pi, n) -> NCQSymExpr:
    """Elementary element directly: M over set compositions separating
    every block of pi."""
    terms = {}
    for phi in set_compositions(n):
        lookup = {}
        for idx, block in enumerate(phi):
            for x in block:
                lookup[x] = idx
        if all(len({lookup[x] for x in block}) == len(block) for block in pi):
            terms[phi] = 1
    return NCQSymExpr(terms)


def verify_tables(n: int = 5, sym_n: int = 4) -> VerifyResult:
    """Every basis-table row identity up to degree n (degree sym_n for
    the symmetrized constructions), plus the tableau oracles and the
    augmented-scaling identities."""
    result = VerifyResult("tables")

    def check(condition, **info):
        result.checks += 1
        if not condition:
            result.fail(**info)
        return result.ok

    for m in range(n + 1):
        for lam in partitions(m):
            for kind in ("m", "maug", "e", "eaug", "h", "p", "s"):
                if not check(
                        qsym.basis_sym(kind, lam)
                        == chromatic.expand(gr.sym_basis_digraph(kind, lam)).at_t(1),
                        table="sym", kind=kind, index=list(lam)):
                    return result
            if not check(qsym.basis_sym("maug", lam)
                         == qsym.basis_sym("m", lam).scale(lambda_superfactorial(lam)),
                         table="sym", kind="maug-scaling", index=list(lam)):
                return result
            if not check(qsym.basis_sym("eaug", lam)
                         == qsym.basis_sym("e", lam).scale(lambda_factorial(lam)),
                         table="sym", kind="eaug-scaling", index=list(lam)):
                return result

        for alpha in compositions(m):
            for kind, maker in (("M", qsym.basis_M), ("F", qsym.basis_F),
                                ("Fbar", qsym.basis_Fbar)):
                if not check(
                        maker(alpha)
                        == chromatic.expand(gr.qsym_basis_digraph(kind, alpha)).at_t(1),
                        table="qsym", kind=kind, index=list(alpha)):
                    return result
            # upper-fundamental expansion identity
            if not check(qsym.basis_Fbar(alpha)
                         == QSymExpr({g: 1 for g in coarsenings(alpha)}),
                         table="qsym", kind="Fbar-coarsening", index=list(alpha)):
                return result
            # composition grids against the tableau oracle
            for row_strict in (False, True):
                grid_fn = (chromatic.row_strict_dual_immaculate if row_strict
                           else chromatic.dual_immaculate)
                want = QSymExpr(_immaculate_contents(alpha, row_strict))
                if not check(grid_fn(alpha) == want, table="grid",
                             row_strict=row_strict, index=list(alpha)):
                    return result

        for phi in set_compositions(m):
            for kind in ("M", "F", "Fbar"):
                if not check(
                        basis_nc(kind, phi)
                        == expand_nc(gr.ncqsym_basis_digraph(kind, phi)).at_t(1),
                        table="ncqsym", kind=kind, index=[list(b) for b in phi]):
                    return result

        for pi in set_partitions(m):
            if not check(basis_ncsym("m", pi) == ncsym_m_expr(pi),
                         table="ncsym", kind="m", index=[list(b) for b in pi]):
                return result
            if not check(basis_ncsym("p", pi) == _ncsym_p_expr(pi, m),
                         table="ncsym", kind="p", index=[list(b) for b in pi]):
                return result
            if not check(basis_ncsym("e", pi) == _ncsym_e_expr(pi, m),
                         table="ncsym", kind="e", index=[list(b) for b in pi]):
                return result
            if m <= sym_n:
                if not check(basis_ncsym("e", pi) == basis_ncsym_e_paths(pi),
                             table="ncsym", kind="e-paths", index=[list(b) for b in pi]):
                    return result
                if not check(basis_ncsym("h", pi) == ncsym_h_meet(pi),
                             table="ncsym", kind="h", index=[list(b) for b in pi]):
                    return result

        # full symmetrization of the labelled grid, by shape
        if 1 <= m <= sym_n:
            import math
            shapes = {}
            for pi in set_partitions(m):
                lam = shape_partition(pi)
                s_pi = shapes.get(lam)
                if s_pi is None:
                    s_pi = shapes[lam] = basis_ncsym("S", pi)
                if not check(rho(s_pi) == qsym.basis_sym("s", lam).scale(math.factorial(m)),
                             table="ncsym", kind="S-rho", index=[list(b) for b in pi]):
                    return result
            values = list(shapes.values())
            for a, b in itertools.combinations(values, 2):
                if not check(a != b, table="ncsym", kind="S-distinct", index=m):
                    return result
            vectors = [{k: Fraction(c.evaluate(1)) for k, c in s.terms.items()}
                       for s in values]
            if not check(exact_rank(vectors) == len(values),
                         table="ncsym", kind="S-span", index=m):
                return result
    return result


# ---------------------------------------------------------------------------
# the r-level structure

def verify_r_closure(n_qsym: int = 5, n_nc: int = 4, r: int = 2,
                     seed: int = 0, trials: int = 20) -> VerifyResult:
    """Rank checks for the four commutative r-bases and the two
    noncommutative ones, plus regrouping of sampled products and
    coproducts (the Hopf-closure argument)."""
    result = VerifyResult("r-closure")
    rng = random.Random(seed)

    for m in range(n_qsym + 1):
        rcs = list(r_compositions(m, r))
        for kind in ("M", "S", "Fbar", "Sbar"):
            vectors = []
            for rc in rcs:
                f = qsym.basis_r(kind, rc.beta, rc.mu, r)
                vectors.append({k: Fraction(c.evaluate(1)) for k, c in f.terms.items()})
                result.checks += 1
                if not qsym.in_qsym_r(f, r):
                    result.fail(part="qsym-span", kind=kind, degree=m,
                                index=combinat.r_composition_to_json(rc))
                    return result
            result.checks += 1
            if exact_rank(vectors) != len(rcs):
                result.fail(part="qsym-rank", kind=kind, degree=m, expected=len(rcs))
                return result

    all_rscs = []
    for m in range(n_nc + 1):
        rscs = list(r_set_compositions(m, r))
        all_rscs.extend(rscs)
        for kind in ("M", "Fbar"):
            vectors = []
            for rsc in rscs:
                f = basis_ncr(kind, rsc.phi, rsc.pi, r)
                vectors.append({k: Fraction(c.evaluate(1)) for k, c in f.terms.items()})
            result.checks += 1
            if exact_rank(vectors) != len(rscs):
                result.fail(part="ncqsym-rank", kind=kind, degree=m, expected=len(rscs))
                return result

    positive = [rsc for rsc in all_rscs if rsc.ground()]
    for trial in range(trials):
        a = rng.choice(positive)
        b = rng.choice(positive)
        fa = basis_ncr("M", a.phi, a.pi, r)
        fb = basis_ncr("M", b.phi, b.pi, r)
        result.checks += 1
        try:
            r_regroup(fa * fb, r)
        except RegroupError as err:
            result.fail(part="product-closure", trial=trial, seed=seed,
                        left=combinat.r_set_composition_to_json(a),
                        right=combinat.r_set_composition_to_json(b),
                        detail=str(err))
            return result
        result.checks += 1
        try:
            r_regroup_tensor(coproduct_nc(fa), r)
        except RegroupError as err:
            result.fail(part="coproduct-closure", trial=trial, seed=seed,
                        left=combinat.r_set_composition_to_json(a), detail=str(err))
            return result
    return result


SUITES = {
    "oracle": verify_oracle,
    "hopf": verify_hopf,
    "tables": verify_tables,
    "r-closure": verify_r_closure,
}
