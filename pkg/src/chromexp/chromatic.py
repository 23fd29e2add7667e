"""The core enumeration engine: from an edge-coloured digraph to its
exact monomial expansion with the ascent statistic, the digraph-side
coproduct, the least number of colours, and the classical chromatic
functions as adapters."""

from __future__ import annotations

from . import graph as gr
from .combinat import composition
from .graph import (
    LEQ,
    LT,
    NEQ,
    Contraction,
    EdgeColouredDigraph,
    SimpleGraph,
    contract,
    closed_subsets,
    colouring_orientation,
    induced,
    is_k_balanced,
    orientations,
)
from .qsym import QSymExpr, QSymTensor, tensor
from .tpoly import TPoly


def expand(g: EdgeColouredDigraph) -> QSymExpr:
    """The exact monomial expansion of the digraph's colouring sum.

    Vertices forced equal by double-edge cycles are contracted first; if
    a dashed or solid edge sits inside a contraction class the result is
    zero. Otherwise, for each number of levels k, every constraint-
    satisfying surjection of the classes onto 1..k adds t^asc to the
    coefficient of the composition of level weights, where asc counts
    the original edges rising between levels.
    """
    if g.n == 0:
        return QSymExpr.one()
    con = contract(g)
    if not con.feasible:
        return QSymExpr.zero()
    terms: dict = {}
    for levels in _surjections(con):
        k = max(levels)
        alpha = [0] * k
        for ci, weight in enumerate(con.weights):
            alpha[levels[ci] - 1] += weight
        asc = sum(1 for ci, cj, _ in con.edges if levels[ci] < levels[cj])
        key = tuple(alpha)
        acc = terms.get(key)
        bump = TPoly.t_power(asc)
        terms[key] = bump if acc is None else acc + bump
    return QSymExpr(terms)


def _surjections(con: Contraction):
    """All constraint-satisfying surjections of the classes onto 1..k,
    for every k up to the class count, by backtracking with forward
    pruning on the already-assigned neighbours."""
    s = len(con.classes)
    constraints = [[] for _ in range(s)]  # (earlier class, relation, flipped)
    for ci, cj, kind in set(con.edges):
        lo, hi = min(ci, cj), max(ci, cj)
        constraints[hi].append((lo, kind, ci > cj))
    levels = [0] * s

    def ok(index: int, level: int) -> bool:
        for other, kind, flipped in constraints[index]:
            a, b = (level, levels[other]) if flipped else (levels[other], level)
            if kind is NEQ and a == b:
                return False
            if kind is LT and not a < b:
                return False
            if kind is LEQ and not a <= b:
                return False
        return True

    def walk(index: int, used_mask: int, k: int):
        missing = k - used_mask.bit_count()
        if s - index < missing:
            return  # not enough classes left to hit every level
        if index == s:
            yield tuple(levels)
            return
        for level in range(1, k + 1):
            if ok(index, level):
                levels[index] = level
                yield from walk(index + 1, used_mask | (1 << level), k)

    for k in range(1, s + 1):
        yield from walk(0, 0, k)


def chromatic_number(g: EdgeColouredDigraph):
    """Least k admitting a proper colouring with k levels; None when no
    proper colouring exists; 0 for the empty digraph."""
    if g.n == 0:
        return 0
    con = contract(g)
    if not con.feasible:
        return None
    # the walk tries the level counts in increasing order
    for levels in _surjections(con):
        return max(levels)
    return None


def split_dashed(g: EdgeColouredDigraph, edge):
    """Replace a dashed edge by its two strict resolutions.

    The expansions of the two results sum to the expansion of g at t=1.
    When the reverse ordered pair already carries an edge, the strict
    constraint absorbs it (a strict edge implies all three kinds).
    """
    u, v, c = edge
    if isinstance(c, str):
        c = gr.EdgeConstraint(c)
    if (u, v, c) not in g.edges:
        raise ValueError(f"{edge} is not an edge of the digraph")
    if c is not NEQ:
        raise ValueError(f"{edge} is not a dashed edge")
    rest = [e for e in g.edges if e != (u, v, c)]
    g_lt = gr.make(g.n, rest + [(u, v, LT)])
    reverse_free = [e for e in rest if (e[0], e[1]) != (v, u)]
    g_gt = gr.make(g.n, reverse_free + [(v, u, LT)])
    return g_lt, g_gt


def coproduct_digraph(g: EdgeColouredDigraph) -> QSymTensor:
    """Digraph-side coproduct at t = 1: the sum over subsets closed under
    outgoing solid and double edges of (expansion off the subset) tensor
    (expansion on the subset)."""
    out = QSymTensor()
    vertices = set(range(g.n))
    for subset in closed_subsets(g):
        left = expand(induced(g, vertices - set(subset))).at_t(1)
        right = expand(induced(g, subset)).at_t(1)
        out = out + tensor(left, right)
    return out


# ---------------------------------------------------------------------------
# adapters for the classical chromatic functions

def stanley(h: SimpleGraph) -> QSymExpr:
    """Chromatic symmetric function of a graph (t specialized to 1)."""
    return expand(gr.from_graph(h, "plain")).at_t(1)


def shareshian_wachs(h: SimpleGraph) -> QSymExpr:
    """Chromatic quasisymmetric function of a labelled graph: dashed
    edges oriented low to high, ascents graded by t."""
    return expand(gr.from_graph(h, "by_label"))


def ellzey(d: EdgeColouredDigraph) -> QSymExpr:
    """Chromatic quasisymmetric function of a digraph: every edge made
    dashed, ascents graded by t along the original directions."""
    return expand(gr.from_digraph_dashed(d))


def crew_spirkl(h: SimpleGraph, weights) -> QSymExpr:
    """Extended chromatic symmetric function of a weighted graph."""
    return expand(gr.from_weighted(h, weights)).at_t(1)


def p_partition_gf(relations, elements=None) -> QSymExpr:
    """Generating function of the partitions of a labelled poset."""
    lg = gr.from_poset(relations, elements)
    return expand(lg.graph).at_t(1)


def dual_immaculate(alpha) -> QSymExpr:
    """Expansion of the composition grid strict only in the first column."""
    return expand(gr.comp_grid(alpha)).at_t(1)


def row_strict_dual_immaculate(alpha) -> QSymExpr:
    return expand(gr.comp_grid(alpha, row_strict=True)).at_t(1)


def humpert(h: SimpleGraph, k: int) -> QSymExpr:
    """Balanced chromatic quasisymmetric function via orientations: the
    sum of expansions of the k-balanced all-solid orientations."""
    if k < 1:
        raise ValueError("k must be positive")
    out = QSymExpr.zero()
    for orientation in orientations(h, LT):
        if is_k_balanced(orientation, k):
            out = out + expand(orientation).at_t(1)
    return out


def humpert_direct(h: SimpleGraph, k: int) -> QSymExpr:
    """The same function by brute force over k-balanced colourings with
    at most |V| levels."""
    if k < 1:
        raise ValueError("k must be positive")
    if h.n == 0:
        return QSymExpr.one()
    terms: dict = {}
    levels = [0] * h.n

    def record():
        top = max(levels)
        alpha = [0] * top
        for lv in levels:
            alpha[lv - 1] += 1
        if not all(alpha):
            return  # not surjective onto 1..top
        orientation = colouring_orientation(h, levels)
        if is_k_balanced(orientation, k):
            key = composition(alpha)
            terms[key] = terms.get(key, TPoly()) + TPoly.of(1)

    def walk(v: int):
        if v == h.n:
            record()
            return
        for level in range(1, h.n + 1):
            if any(levels[w] == level for w in h.neighbours(v) if w < v):
                continue
            levels[v] = level
            walk(v + 1)
            levels[v] = 0

    walk(0)
    return QSymExpr(terms)
