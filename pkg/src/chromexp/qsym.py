"""Quasisymmetric functions in monomial coordinates with exact
t-polynomial coefficients: Hopf operations, the classical bases, the
r-level bases, symmetry detection, basis conversion, and the counting
polynomial obtained by restricting to p colours."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import combinat, graph
from .combinat import (
    RComposition,
    coarsenings,
    composition,
    composition_sort_key,
    compositions,
    distinct_rearrangements,
    lambda_factorial,
    lambda_superfactorial,
    partition,
    partitions,
    quasi_shuffle,
    r_compositions,
    sort_to_partition,
)
from .linalg import solve_combination
from .tpoly import TPoly, tpoly_from_json, tpoly_to_json


def _merge(terms: dict, key, coeff):
    if not coeff:
        return
    acc = terms.get(key)
    acc = coeff if acc is None else acc + coeff
    if acc:
        terms[key] = acc
    else:
        del terms[key]


def _as_tpoly(value) -> TPoly:
    return value if isinstance(value, TPoly) else TPoly.of(value)


class QSymExpr:
    """A finite sum of monomial quasisymmetric functions M_alpha with
    TPoly coefficients. Mixed degrees may coexist; the keys of each
    homogeneous component all have the same size."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict[tuple[int, ...], TPoly] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            _merge(data, composition(key), _as_tpoly(coeff))
        self.terms = data

    @classmethod
    def zero(cls) -> "QSymExpr":
        return cls()

    @classmethod
    def one(cls) -> "QSymExpr":
        return cls({(): 1})

    def coefficient(self, alpha) -> TPoly:
        return self.terms.get(composition(alpha), TPoly())

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: composition_sort_key(kv[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, QSymExpr) and self.terms == other.terms

    def __add__(self, other) -> "QSymExpr":
        if not isinstance(other, QSymExpr):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            _merge(out, key, coeff)
        return QSymExpr(out)

    def __neg__(self) -> "QSymExpr":
        return QSymExpr({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "QSymExpr":
        if not isinstance(other, QSymExpr):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "QSymExpr":
        factor = _as_tpoly(factor)
        return QSymExpr({k: c * factor for k, c in self.terms.items()})

    def __mul__(self, other):
        """Product via the overlapping shuffle on monomial indices."""
        if isinstance(other, QSymExpr):
            out: dict = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    coeff = ca * cb
                    for gamma, mult in quasi_shuffle(a, b).items():
                        _merge(out, gamma, coeff * mult)
            return QSymExpr(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def at_t(self, t=1) -> "QSymExpr":
        """Specialize the ascent variable."""
        return QSymExpr({k: TPoly.of(c.evaluate(t)) for k, c in self.terms.items()})

    def t_degree(self) -> int:
        return max((c.degree() for c in self.terms.values()), default=-1)

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({sum(k) for k in self.terms}))

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("expression is zero or mixed-degree")
        return degs[0]

    def homogeneous_component(self, n: int) -> "QSymExpr":
        return QSymExpr({k: c for k, c in self.terms.items() if sum(k) == n})

    def support(self):
        return set(self.terms)

    def __repr__(self):
        return f"QSymExpr({self.pretty()})"

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key, coeff in self.items_sorted():
            name = "M" + combinat.format_composition(key)
            bits.append(_pretty_term(coeff, name))
        return _join_terms(bits)


def _join_terms(bits) -> str:
    out = " + ".join(bits)
    return out.replace("+ -", "- ")


def _pretty_term(coeff: TPoly, name: str) -> str:
    if coeff == TPoly.of(1):
        return name
    if coeff == TPoly.of(-1):
        return f"-{name}"
    text = coeff.pretty()
    if coeff.is_constant():
        return f"{text}*{name}"
    return f"({text})*{name}"


class QSymTensor:
    """A sum of two-fold tensors of monomial terms, for coproducts."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (left, right), coeff in items:
            _merge(data, (composition(left), composition(right)), _as_tpoly(coeff))
        self.terms = data

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, QSymTensor) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            _merge(out, key, coeff)
        return QSymTensor(out)

    def __sub__(self, other):
        return self + QSymTensor({k: -c for k, c in other.terms.items()})

    def __mul__(self, other):
        """Componentwise product (a x b)(c x d) = ac x bd."""
        if not isinstance(other, QSymTensor):
            return NotImplemented
        out: dict = {}
        for (a1, a2), ca in self.terms.items():
            for (b1, b2), cb in other.terms.items():
                coeff = ca * cb
                left = quasi_shuffle(a1, b1)
                right = quasi_shuffle(a2, b2)
                for g1, m1 in left.items():
                    for g2, m2 in right.items():
                        _merge(out, (g1, g2), coeff * (m1 * m2))
        return QSymTensor(out)

    def items_sorted(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (composition_sort_key(kv[0][0]), composition_sort_key(kv[0][1])),
        )

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (a, b), coeff in self.items_sorted():
            name = "M%s (x) M%s" % (combinat.format_composition(a),
                                    combinat.format_composition(b))
            bits.append(_pretty_term(coeff, name))
        return _join_terms(bits)

    def __repr__(self):
        return f"QSymTensor({self.pretty()})"


def tensor(f: QSymExpr, g: QSymExpr) -> QSymTensor:
    out: dict = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            _merge(out, (a, b), ca * cb)
    return QSymTensor(out)


def coproduct(f: QSymExpr) -> QSymTensor:
    """Deconcatenation of monomial indices, coefficients riding along."""
    out: dict = {}
    for alpha, coeff in f.terms.items():
        for i in range(len(alpha) + 1):
            _merge(out, (alpha[:i], alpha[i:]), coeff)
    return QSymTensor(out)


# ---------------------------------------------------------------------------
# bases

def basis_M(alpha) -> QSymExpr:
    return QSymExpr({composition(alpha): 1})


def basis_F(alpha) -> QSymExpr:
    """Fundamental basis element, expanded by the digraph engine.

    The defining digraph is the solid chain of double paths over the
    parts; its chromatic expansion at t = 1 is the expansion used here.
    """
    from .chromatic import expand

    return expand(graph.qsym_basis_digraph("F", alpha)).at_t(1)


def basis_Fbar(alpha) -> QSymExpr:
    """Upper-fundamental element: the sum of M over coarsenings."""
    return QSymExpr({gamma: 1 for gamma in coarsenings(composition(alpha))})


def basis_sym(kind: str, lam) -> QSymExpr:
    """Symmetric-function bases in M coordinates, from their
    combinatorial definitions (not from digraphs): kind is one of
    m, maug, e, eaug, h, p, s."""
    lam = partition(lam)
    if kind == "m":
        return QSymExpr({alpha: 1 for alpha in distinct_rearrangements(lam)})
    if kind == "maug":
        return basis_sym("m", lam).scale(lambda_superfactorial(lam))
    if kind == "e":
        return _product_over_parts(lam, lambda p: QSymExpr({(1,) * p: 1}))
    if kind == "eaug":
        return basis_sym("e", lam).scale(lambda_factorial(lam))
    if kind == "h":
        return _product_over_parts(
            lam, lambda p: QSymExpr({alpha: 1 for alpha in compositions(p)}))
    if kind == "p":
        return _product_over_parts(lam, lambda p: QSymExpr({(p,): 1}))
    if kind == "s":
        return QSymExpr({alpha: count for alpha, count in _ssyt_contents(lam).items()})
    raise ValueError(f"unknown symmetric basis kind {kind!r}")


def _product_over_parts(lam, factor) -> QSymExpr:
    out = QSymExpr.one()
    for p in lam:
        out = out * factor(p)
    return out


def _ssyt_contents(lam) -> dict[tuple[int, ...], int]:
    """Number of semistandard tableaux of the given shape per content
    composition (rows weakly increase, columns strictly increase)."""
    n = sum(lam)
    counts: dict[tuple[int, ...], int] = {}
    if n == 0:
        return {(): 1}
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def admissible(i, j, value):
        if j > 0 and value < filling[(i, j - 1)]:
            return False
        if i > 0 and value <= filling[(i - 1, j)]:
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


def basis_r(kind: str, beta, mu, r) -> QSymExpr:
    """r-level basis elements (kind M, S, Fbar, Sbar), expanded through
    their defining digraphs."""
    from .chromatic import expand

    RComposition(r, beta, mu)
    return expand(graph.r_basis_digraph(kind, beta, mu)).at_t(1)


# ---------------------------------------------------------------------------
# symmetry and conversion

def _t_slices(terms) -> dict[int, dict]:
    """Split a term map into per-power-of-t rational coordinate dicts."""
    slices: dict[int, dict] = {}
    for key, coeff in terms.items():
        for power, c in enumerate(coeff.coeffs):
            if c:
                slices.setdefault(power, {})[key] = Fraction(c)
    return slices


def is_symmetric(f: QSymExpr) -> bool:
    """Whether the M coefficients are constant on rearrangement classes."""
    for alpha, coeff in f.terms.items():
        for other in distinct_rearrangements(sort_to_partition(alpha)):
            if f.terms.get(other, TPoly()) != coeff:
                return False
    return True


def to_sym_basis(f: QSymExpr, kind: str) -> dict[tuple[int, ...], TPoly]:
    """Expand a symmetric f over the chosen symmetric basis.

    Returns a partition-indexed map of TPoly coefficients (entries may
    be fractions). Raises on non-symmetric input.
    """
    if not is_symmetric(f):
        raise ValueError("expression is not symmetric")
    out: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for n in f.degrees():
        component = f.homogeneous_component(n)
        lams = list(partitions(n))
        columns = [dict(basis_sym(kind, lam).terms) for lam in lams]
        columns = [{k: c.evaluate(1) for k, c in col.items()} for col in columns]
        for power, coords in _t_slices(component.terms).items():
            solution = solve_combination(columns, coords)
            if solution is None:
                raise ValueError(f"degree-{n} component is not in the {kind} span")
            for lam, value in zip(lams, solution):
                if value:
                    out.setdefault(lam, {})[power] = value
    return {lam: _tpoly_from_slices(powers) for lam, powers in out.items()}


def _tpoly_from_slices(powers: dict[int, Fraction]) -> TPoly:
    top = max(powers)
    return TPoly(tuple(_fraction_or_int(powers.get(k, 0)) for k in range(top + 1)))


def _fraction_or_int(value):
    value = Fraction(value)
    return int(value) if value.denominator == 1 else value


def to_qsym_basis(f: QSymExpr, kind: str) -> dict[tuple[int, ...], TPoly]:
    """Expand f over the F or Fbar basis (M returns the term map itself)."""
    if kind == "M":
        return dict(f.terms)
    if kind not in ("F", "Fbar"):
        raise ValueError(f"unknown quasisymmetric basis kind {kind!r}")
    maker = basis_F if kind == "F" else basis_Fbar
    out: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for n in f.degrees():
        component = f.homogeneous_component(n)
        alphas = list(compositions(n))
        columns = [{k: c.evaluate(1) for k, c in maker(a).terms.items()} for a in alphas]
        for power, coords in _t_slices(component.terms).items():
            solution = solve_combination(columns, coords)
            if solution is None:
                raise ValueError(f"no {kind} expansion found in degree {n}")
            for alpha, value in zip(alphas, solution):
                if value:
                    out.setdefault(alpha, {})[power] = value
    return {a: _tpoly_from_slices(powers) for a, powers in out.items()}


def in_qsym_r(f: QSymExpr, r) -> bool:
    """Exact membership of f in the r-level subspace of its degrees."""
    if r == 1:
        return True
    for n in f.degrees():
        component = f.homogeneous_component(n)
        columns = [
            {k: c.evaluate(1) for k, c in basis_r("M", rc.beta, rc.mu, r).terms.items()}
            for rc in r_compositions(n, r)
        ]
        for _, coords in _t_slices(component.terms).items():
            if solve_combination(columns, coords) is None:
                return False
    return True


# ---------------------------------------------------------------------------
# the counting polynomial

@dataclass(frozen=True)
class RationalPoly:
    """A univariate polynomial over exact rationals, coefficients from
    degree 0 up."""

    coeffs: tuple

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _fraction_or_int(acc)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        def get(p, k):
            return p.coeffs[k] if k < len(p.coeffs) else 0
        return _rational_poly([get(self, k) + get(other, k) for k in range(n)])

    def scale(self, factor):
        return _rational_poly([c * factor for c in self.coeffs])

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                bits.append(str(c))
            else:
                power = "p" if k == 1 else f"p^{k}"
                bits.append(power if c == 1 else f"{c}*{power}")
        return _join_terms(bits)


def _rational_poly(coeffs) -> RationalPoly:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return RationalPoly(tuple(_fraction_or_int(c) for c in cs))


def _binomial_poly(k: int) -> RationalPoly:
    """binomial(p, k) as a polynomial in p."""
    coeffs = [Fraction(1)]
    for i in range(k):
        # multiply by (p - i)
        shifted = [Fraction(0)] + coeffs
        coeffs = [s - i * c for s, c in zip(shifted, coeffs + [Fraction(0)])]
    return _rational_poly([c / math.factorial(k) for c in coeffs])


def evaluate_ones(f: QSymExpr, p: int) -> int:
    """Exact value after substituting 1 for the first p variables and 0
    for the rest; f must already be specialized at t = 1."""
    if f.t_degree() > 0:
        raise ValueError("specialize t first (at_t)")
    total = 0
    for alpha, coeff in f.terms.items():
        total += coeff.evaluate(1) * math.comb(p, len(alpha))
    return total


def chromatic_polynomial(f: QSymExpr) -> RationalPoly:
    """The polynomial p -> evaluate_ones(f, p), written out exactly."""
    if f.t_degree() > 0:
        raise ValueError("specialize t first (at_t)")
    out = _rational_poly([])
    for alpha, coeff in f.terms.items():
        out = out + _binomial_poly(len(alpha)).scale(Fraction(coeff.evaluate(1)))
    return out


def rational_poly_to_json(poly: RationalPoly) -> dict:
    return {"coeffs_p": [f"{Fraction(c).numerator}/{Fraction(c).denominator}"
                         for c in poly.coeffs]}


# ---------------------------------------------------------------------------
# infinite families of bases

@dataclass(frozen=True)
class FamilyBasisReport:
    """Unitriangularity report for a double-edge-only family."""

    compositions: tuple
    unitriangular: bool
    failures: tuple


def family_basis(n: int, family):
    """Expansions of the solid chains built from a double-edge-only
    family, indexed by the compositions of n, plus a report checking the
    expansion of each index alpha is M_alpha plus strictly finer terms.

    family: a callable i -> digraph with i vertices and only double edges.
    """
    from .chromatic import expand

    cache: dict[int, graph.EdgeColouredDigraph] = {}

    def member(i: int):
        if i not in cache:
            g = family(i)
            if g.n != i:
                raise ValueError(f"family({i}) has {g.n} vertices")
            if any(c is not graph.LEQ for _, _, c in g.edges):
                raise ValueError(f"family({i}) has an edge that is not a double edge")
            cache[i] = g
        return cache[i]

    alphas = tuple(compositions(n))
    elements = {}
    failures = []
    for alpha in alphas:
        g = graph.combine_chain("solid", [member(p) for p in alpha])
        f = expand(g).at_t(1)
        elements[alpha] = f
        if f.coefficient(alpha) != TPoly.of(1):
            failures.append((alpha, "leading coefficient is not 1"))
        for beta in f.support():
            if beta != alpha and not (combinat.descent_set(alpha) < combinat.descent_set(beta)):
                failures.append((alpha, f"term {beta} does not strictly refine {alpha}"))
    report = FamilyBasisReport(alphas, not failures, tuple(failures))
    return elements, report


# ---------------------------------------------------------------------------
# JSON forms

def qsym_to_json(f: QSymExpr) -> dict:
    degs = f.degrees()
    if len(degs) > 1:
        return {"components": [qsym_to_json(f.homogeneous_component(n)) for n in degs]}
    return {
        "degree": degs[0] if degs else 0,
        "terms": [{"composition": list(alpha), "coeff_t": tpoly_to_json(coeff)}
                  for alpha, coeff in f.items_sorted()],
    }


def qsym_from_json(data) -> QSymExpr:
    if "components" in data:
        out = QSymExpr.zero()
        for part in data["components"]:
            out = out + qsym_from_json(part)
        return out
    return QSymExpr({tuple(t["composition"]): tpoly_from_json(t["coeff_t"])
                     for t in data["terms"]})


def qsym_tensor_to_json(t: QSymTensor) -> dict:
    return {
        "terms": [{"left": list(a), "right": list(b), "coeff_t": tpoly_to_json(coeff)}
                  for (a, b), coeff in t.items_sorted()],
    }
