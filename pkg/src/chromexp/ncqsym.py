"""Quasisymmetric functions in noncommuting variables: the labelled
chromatic expansion, the set-composition bases, symmetrization, the
permutation fundamental family, and the full r-level structure with
its regrouping check."""

from __future__ import annotations

import itertools

from . import combinat, graph as gr
from .chromatic import _surjections
from .combinat import (
    RSetComposition,
    bar_shuffle,
    corruptions,
    ground_set,
    partition_meet,
    permutation,
    r_split,
    reformations,
    runs_set_composition,
    set_composition,
    set_composition_sort_key,
    set_partition,
    shape,
    shape_partition,
    shifted_quasi_shuffle,
    lambda_factorial,
)
from .graph import LabelledDigraph, contract, closed_subsets, induced_labelled, relabel, standardize_labels
from .qsym import QSymExpr, _join_terms, _merge, _as_tpoly, _pretty_term
from .tpoly import TPoly, tpoly_from_json, tpoly_to_json


def _check_key(phi):
    phi = set_composition(phi)
    ground = ground_set(phi)
    if ground != frozenset(range(1, len(ground) + 1)):
        raise ValueError(f"term index must cover an initial segment: {phi}")
    return phi


class NCQSymExpr:
    """A finite sum of monomial functions M_Phi over set compositions of
    initial segments, with TPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            _merge(data, _check_key(key), _as_tpoly(coeff))
        self.terms = data

    @classmethod
    def zero(cls) -> "NCQSymExpr":
        return cls()

    @classmethod
    def one(cls) -> "NCQSymExpr":
        return cls({(): 1})

    def coefficient(self, phi) -> TPoly:
        return self.terms.get(set_composition(phi), TPoly())

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: set_composition_sort_key(kv[0]))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCQSymExpr) and self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, NCQSymExpr):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            _merge(out, key, coeff)
        return NCQSymExpr(out)

    def __neg__(self):
        return NCQSymExpr({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NCQSymExpr):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "NCQSymExpr":
        factor = _as_tpoly(factor)
        return NCQSymExpr({k: c * factor for k, c in self.terms.items()})

    def __mul__(self, other):
        """Product via the shifted quasi-shuffle of term indices."""
        if isinstance(other, NCQSymExpr):
            out: dict = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    coeff = ca * cb
                    for gamma in shifted_quasi_shuffle(a, b):
                        _merge(out, gamma, coeff)
            return NCQSymExpr(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def at_t(self, t=1) -> "NCQSymExpr":
        return NCQSymExpr({k: TPoly.of(c.evaluate(t)) for k, c in self.terms.items()})

    def t_degree(self) -> int:
        return max((c.degree() for c in self.terms.values()), default=-1)

    def degrees(self):
        return tuple(sorted({sum(len(b) for b in k) for k in self.terms}))

    def homogeneous_component(self, n: int) -> "NCQSymExpr":
        return NCQSymExpr({k: c for k, c in self.terms.items()
                           if sum(len(b) for b in k) == n})

    def support(self):
        return set(self.terms)

    def __repr__(self):
        return f"NCQSymExpr({self.pretty()})"

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        return _join_terms(
            _pretty_term(coeff, "M" + combinat.format_set_composition(key))
            for key, coeff in self.items_sorted())


class NCQSymTensor:
    """Two-fold tensors of noncommutative monomial terms."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (left, right), coeff in items:
            _merge(data, (_check_key(left), _check_key(right)), _as_tpoly(coeff))
        self.terms = data

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCQSymTensor) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            _merge(out, key, coeff)
        return NCQSymTensor(out)

    def __sub__(self, other):
        return self + NCQSymTensor({k: -c for k, c in other.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCQSymTensor):
            return NotImplemented
        out: dict = {}
        for (a1, a2), ca in self.terms.items():
            for (b1, b2), cb in other.terms.items():
                coeff = ca * cb
                for g1 in shifted_quasi_shuffle(a1, b1):
                    for g2 in shifted_quasi_shuffle(a2, b2):
                        _merge(out, (g1, g2), coeff)
        return NCQSymTensor(out)

    def items_sorted(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (set_composition_sort_key(kv[0][0]),
                                      set_composition_sort_key(kv[0][1])))

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (a, b), coeff in self.items_sorted():
            name = "M%s (x) M%s" % (combinat.format_set_composition(a),
                                    combinat.format_set_composition(b))
            bits.append(_pretty_term(coeff, name))
        return _join_terms(bits)

    def __repr__(self):
        return f"NCQSymTensor({self.pretty()})"


def tensor_nc(f: NCQSymExpr, g: NCQSymExpr) -> NCQSymTensor:
    out: dict = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            _merge(out, (a, b), ca * cb)
    return NCQSymTensor(out)


# ---------------------------------------------------------------------------
# the labelled expansion and the commutation map

def expand_nc(lg: LabelledDigraph) -> NCQSymExpr:
    """Noncommutative chromatic expansion of a labelled digraph.

    Labels are standardized onto 1..n first. The enumeration is the same
    contraction-and-surjection walk as the commutative expansion; each
    surjection contributes t^asc to the set composition whose i-th block
    holds the labels coloured at level i.
    """
    lg = standardize_labels(lg)
    g = lg.graph
    if g.n == 0:
        return NCQSymExpr.one()
    con = contract(g)
    if not con.feasible:
        return NCQSymExpr.zero()
    class_labels = [tuple(lg.labels[v] for v in cls) for cls in con.classes]
    terms: dict = {}
    for levels in _surjections(con):
        k = max(levels)
        blocks = [[] for _ in range(k)]
        for ci, labs in enumerate(class_labels):
            blocks[levels[ci] - 1].extend(labs)
        phi = tuple(tuple(sorted(b)) for b in blocks)
        asc = sum(1 for ci, cj, _ in con.edges if levels[ci] < levels[cj])
        bump = TPoly.t_power(asc)
        acc = terms.get(phi)
        terms[phi] = bump if acc is None else acc + bump
    return NCQSymExpr(terms)


def rho(f: NCQSymExpr) -> QSymExpr:
    """Let the variables commute: M_Phi goes to M of the shape of Phi."""
    out: dict = {}
    for phi, coeff in f.terms.items():
        _merge(out, shape(phi), coeff)
    return QSymExpr(out)


def multiply_nc(f: NCQSymExpr, g: NCQSymExpr) -> NCQSymExpr:
    return f * g


def coproduct_nc(f: NCQSymExpr) -> NCQSymTensor:
    """Split each index into a prefix and suffix and standardize both."""
    out: dict = {}
    for phi, coeff in f.terms.items():
        for i in range(len(phi) + 1):
            left = combinat.standardize_set_composition(phi[:i])
            right = combinat.standardize_set_composition(phi[i:])
            _merge(out, (left, right), coeff)
    return NCQSymTensor(out)


def coproduct_nc_digraph(lg: LabelledDigraph) -> NCQSymTensor:
    """Digraph-side coproduct at t = 1, with labels standardized on both
    factors."""
    lg = standardize_labels(lg)
    out = NCQSymTensor()
    vertices = set(range(lg.graph.n))
    for subset in closed_subsets(lg.graph):
        left = expand_nc(induced_labelled(lg, vertices - set(subset))).at_t(1)
        right = expand_nc(induced_labelled(lg, subset)).at_t(1)
        out = out + tensor_nc(left, right)
    return out


# ---------------------------------------------------------------------------
# bases

def basis_nc(kind: str, phi) -> NCQSymExpr:
    """M (indicator), F (sum over bar-addition refinements), or Fbar
    (sum over bar-removal coarsenings) at a set composition of [n]."""
    phi = _check_key(phi)
    if kind == "M":
        return NCQSymExpr({phi: 1})
    if kind == "F":
        return NCQSymExpr({psi: 1 for psi in reformations(phi)})
    if kind == "Fbar":
        return NCQSymExpr({psi: 1 for psi in corruptions(phi)})
    raise ValueError(f"unknown noncommutative basis kind {kind!r}")


def ncsym_m_expr(pi) -> NCQSymExpr:
    """Monomial symmetric function in noncommuting variables, directly:
    the sum of M over all orderings of the blocks."""
    pi = set_partition(pi)
    return NCQSymExpr({tuple(order): 1 for order in itertools.permutations(pi)})


def ncsym_h_meet(pi) -> NCQSymExpr:
    """Complete homogeneous element via the lattice-meet formula."""
    pi = set_partition(pi)
    n = len(ground_set(pi))
    out = NCQSymExpr.zero()
    for omega in combinat.set_partitions(n):
        factor = lambda_factorial(shape_partition(partition_meet(omega, pi)))
        out = out + ncsym_m_expr(omega).scale(factor)
    return out


def basis_ncsym(kind: str, pi) -> NCQSymExpr:
    """NCSym bases generated by the digraph engine.

    m, p, e come from single labelled digraphs (dashed chain of cycles,
    disjoint cycles, disjoint complete blocks); h symmetrizes double
    paths blockwise; S symmetrizes the labelled partition grid over the
    whole symmetric group.
    """
    pi = set_partition(pi)
    if kind in ("m", "p", "e"):
        return expand_nc(gr.ncsym_basis_digraph(kind, pi)).at_t(1)
    if kind == "h":
        return _blockwise_symmetrized(pi, "Q").at_t(1)
    if kind == "S":
        lam = shape_partition(pi)
        return symmetrize(gr.schur_labelled(lam)).at_t(1)
    raise ValueError(f"unknown NCSym basis kind {kind!r}")


def basis_ncsym_e_paths(pi) -> NCQSymExpr:
    """The path realization of the elementary basis: blockwise
    symmetrized disjoint solid paths (must agree with the K route)."""
    return _blockwise_symmetrized(set_partition(pi), "P").at_t(1)


def _blockwise_symmetrized(pi, atom_kind: str) -> NCQSymExpr:
    """Sum of expansions over independent relabellings of each block's atom."""
    out = NCQSymExpr.zero()
    block_orders = [itertools.permutations(b) for b in pi]
    for choice in itertools.product(*block_orders):
        parts = [LabelledDigraph(gr.atom(atom_kind, len(labels)), labels)
                 for labels in choice]
        out = out + expand_nc(gr.combine_chain_labelled("disjoint", parts))
    return out


def symmetrize(lg: LabelledDigraph, max_labels: int = 5) -> NCQSymExpr:
    """Sum of expansions over every relabelling of the label set.

    The |A|! blow-up is inherent; max_labels guards against runaway
    inputs and can be raised explicitly.
    """
    labels = sorted(lg.labels)
    if len(labels) > max_labels:
        raise ValueError(
            f"symmetrizing over {len(labels)}! relabellings exceeds the "
            f"max_labels={max_labels} guard")
    out = NCQSymExpr.zero()
    for perm in itertools.permutations(labels):
        sigma = dict(zip(labels, perm))
        out = out + expand_nc(relabel(lg, sigma))
    return out


# ---------------------------------------------------------------------------
# the permutation fundamental family

def mr_F(sigma) -> NCQSymExpr:
    """Fundamental element attached to a permutation: the F basis element
    of the set composition of its maximal increasing runs."""
    sigma = permutation(sigma)
    if not sigma:
        return NCQSymExpr.one()
    return basis_nc("F", runs_set_composition(sigma))


def mr_inject_check(sigma, tau) -> bool:
    """Whether the permutation-fundamental images multiply consistently:
    the word-level product of the realizations equals the realization of
    the shifted-shuffle product."""
    from .oracle import realize_nc

    sigma, tau = permutation(sigma), permutation(tau)
    k = len(sigma) + len(tau)
    f, g = mr_F(sigma), mr_F(tau)
    return realize_nc(f, k) * realize_nc(g, k) == realize_nc(f * g, k)


# ---------------------------------------------------------------------------
# the r-level structure

class RegroupError(ValueError):
    """Raised when a term map is not constant on some bar-shuffle fiber."""

    def __init__(self, fiber_index, details):
        self.fiber_index = fiber_index
        self.details = details
        super().__init__(f"coefficients not constant on the fiber of {fiber_index}: {details}")


def basis_ncr(kind: str, phi, pi, r) -> NCQSymExpr:
    """r-level bases: the dominant monomial (M) via the bar-shuffle sum,
    and the upper fundamental (Fbar) summing M over bar removals on the
    composition side."""
    rsc = RSetComposition(r, phi, pi)
    ground = rsc.ground()
    if ground != frozenset(range(1, len(ground) + 1)):
        raise ValueError(f"ground set must be an initial segment: {sorted(ground)}")
    if kind == "M":
        return NCQSymExpr({psi: 1 for psi in bar_shuffle(rsc.phi, rsc.pi)})
    if kind == "Fbar":
        out = NCQSymExpr.zero()
        for psi in corruptions(rsc.phi):
            out = out + basis_ncr("M", psi, rsc.pi, r)
        return out
    raise ValueError(f"unknown r-basis kind {kind!r}")


def r_regroup(f: NCQSymExpr, r) -> dict[RSetComposition, TPoly]:
    """Collect an expression into r-level coordinates.

    Every term index is split at r; the coefficient must be constant
    across the full bar-shuffle fiber of the split (missing members
    count as zero), else RegroupError reports the offending fiber.
    """
    remaining = dict(f.terms)
    out: dict[RSetComposition, TPoly] = {}
    while remaining:
        psi = min(remaining, key=set_composition_sort_key)
        phi, pi = r_split(psi, r)
        coeff = remaining[psi]
        fiber = bar_shuffle(phi, pi)
        bad = {member: remaining.get(member, TPoly()) for member in fiber
               if remaining.get(member, TPoly()) != coeff}
        if bad:
            raise RegroupError((phi, pi), bad)
        for member in fiber:
            remaining.pop(member, None)
        out[RSetComposition(r, phi, pi)] = coeff
    return out


def r_regroup_tensor(t: NCQSymTensor, r) -> dict:
    """Regroup both tensor legs; fibers are products of leg fibers."""
    remaining = dict(t.terms)
    out: dict = {}
    while remaining:
        psi1, psi2 = min(remaining, key=lambda k: (set_composition_sort_key(k[0]),
                                                   set_composition_sort_key(k[1])))
        s1, s2 = r_split(psi1, r), r_split(psi2, r)
        coeff = remaining[(psi1, psi2)]
        fiber = [(m1, m2) for m1 in bar_shuffle(*s1) for m2 in bar_shuffle(*s2)]
        bad = {member: remaining.get(member, TPoly()) for member in fiber
               if remaining.get(member, TPoly()) != coeff}
        if bad:
            raise RegroupError((s1, s2), bad)
        for member in fiber:
            remaining.pop(member, None)
        out[(RSetComposition(r, *s1), RSetComposition(r, *s2))] = coeff
    return out


def in_ncqsym_r(f: NCQSymExpr, r) -> bool:
    try:
        r_regroup(f, r)
    except RegroupError:
        return False
    return True


# ---------------------------------------------------------------------------
# coordinates in other bases

def to_ncqsym_basis(f: NCQSymExpr, kind: str) -> dict[tuple, TPoly]:
    """Expand f over the F or Fbar basis by triangular peeling.

    F elements add strictly finer monomial terms and Fbar elements add
    strictly coarser ones, so peeling support keys by block count (fewest
    first for F, most first for Fbar) isolates one coefficient at a time.
    """
    if kind == "M":
        return dict(f.terms)
    if kind not in ("F", "Fbar"):
        raise ValueError(f"unknown noncommutative basis kind {kind!r}")
    ascending = kind == "F"
    out: dict[tuple, TPoly] = {}
    remaining = dict(f.terms)
    while remaining:
        psi = min(remaining,
                  key=lambda k: ((len(k) if ascending else -len(k)),
                                 set_composition_sort_key(k)))
        coeff = remaining[psi]
        out[psi] = coeff
        for member, c in basis_nc(kind, psi).terms.items():
            _merge(remaining, member, -(coeff * c))
    return out


def to_ncsym_m(f: NCQSymExpr) -> dict[tuple, TPoly]:
    """Coordinates of f over the NCSym monomial basis.

    Requires the coefficients to be constant across every ordering of
    each underlying set partition; raises ValueError otherwise.
    """
    remaining = dict(f.terms)
    out: dict[tuple, TPoly] = {}
    while remaining:
        phi = min(remaining, key=set_composition_sort_key)
        pi = set_partition(phi)
        coeff = remaining[phi]
        for order in itertools.permutations(pi):
            if remaining.get(order, TPoly()) != coeff:
                raise ValueError(
                    f"not symmetric in noncommuting variables at {pi}")
            remaining.pop(order, None)
        out[pi] = coeff
    return out


# ---------------------------------------------------------------------------
# JSON forms

def ncqsym_to_json(f: NCQSymExpr) -> dict:
    return {
        "terms": [{"set_composition": [list(b) for b in phi],
                   "coeff_t": tpoly_to_json(coeff)}
                  for phi, coeff in f.items_sorted()],
    }


def ncqsym_from_json(data) -> NCQSymExpr:
    return NCQSymExpr({
        tuple(tuple(b) for b in t["set_composition"]): tpoly_from_json(t["coeff_t"])
        for t in data["terms"]})


def ncqsym_tensor_to_json(t: NCQSymTensor) -> dict:
    return {
        "terms": [{"left": [list(b) for b in a], "right": [list(b) for b in b_],
                   "coeff_t": tpoly_to_json(coeff)}
                  for (a, b_), coeff in t.items_sorted()],
    }


def r_coordinates_to_json(coords: dict) -> dict:
    items = sorted(coords.items(),
                   key=lambda kv: (set_composition_sort_key(kv[0].phi), kv[0].pi))
    return {
        "terms": [{"comp_part": [list(b) for b in rsc.phi],
                   "part_part": [list(b) for b in rsc.pi],
                   "coeff_t": tpoly_to_json(coeff)}
                  for rsc, coeff in items],
    }
