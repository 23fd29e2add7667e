"""Edge-coloured digraphs: construction, the four combination sums,
named families, structural analyses, and serialization.

Edges carry one of three colour constraints on vertex colours:

* NEQ (dashed)  - endpoints get different colours,
* LT  (solid)   - source colour strictly below target colour,
* LEQ (double)  - source colour weakly below target colour.

Vertices are positional, 0..n-1; functions never test isomorphism.
Equality of the induced chromatic expansions is the observable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .combinat import partition, composition


class EdgeConstraint(Enum):
    NEQ = "neq"
    LT = "lt"
    LEQ = "leq"

    @property
    def symbol(self) -> str:
        return {"neq": "-/->", "lt": "->", "leq": "=>"}[self.value]


NEQ = EdgeConstraint.NEQ
LT = EdgeConstraint.LT
LEQ = EdgeConstraint.LEQ

COMBINE_KINDS = ("disjoint", "dashed", "solid", "double")
_CROSS = {"dashed": NEQ, "solid": LT, "double": LEQ}


@dataclass(frozen=True)
class EdgeColouredDigraph:
    """A simple digraph (no loops, one edge per ordered pair) with edge colours."""

    n: int
    edges: frozenset

    def edge_list(self):
        """Edges sorted for deterministic iteration."""
        return sorted(self.edges, key=lambda e: (e[0], e[1], e[2].value))

    def edges_of(self, kind: EdgeConstraint):
        return [e for e in self.edge_list() if e[2] is kind]

    def __repr__(self):
        inner = ", ".join(f"{u}{c.symbol}{v}" for u, v, c in self.edge_list())
        return f"Digraph(n={self.n}; {inner})"


def make(n: int, edges=()) -> EdgeColouredDigraph:
    """Validate and build an edge-coloured digraph on vertices 0..n-1."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    seen_pairs = set()
    out = set()
    for edge in edges:
        u, v, c = edge
        u, v = int(u), int(v)
        if isinstance(c, str):
            c = EdgeConstraint(c)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in edge {edge}")
        if u == v:
            raise ValueError(f"loops are not allowed: {edge}")
        if (u, v) in seen_pairs:
            raise ValueError(f"duplicate ordered pair ({u}, {v})")
        seen_pairs.add((u, v))
        out.add((u, v, c))
    return EdgeColouredDigraph(n, frozenset(out))


EMPTY = make(0)


@dataclass(frozen=True)
class LabelledDigraph:
    """An edge-coloured digraph plus a bijective vertex labelling.

    labels[v] is the label of vertex v; the label set is any finite set
    of distinct positive integers.
    """

    graph: EdgeColouredDigraph
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError("one label per vertex required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"labels must be distinct: {self.labels}")
        if any(l < 1 for l in self.labels):
            raise ValueError("labels must be positive integers")

    def label_set(self) -> frozenset[int]:
        return frozenset(self.labels)

    def __repr__(self):
        return f"Labelled({self.graph!r}, labels={list(self.labels)})"


def labelled(graph: EdgeColouredDigraph, labels=None) -> LabelledDigraph:
    """Attach labels (default 1..n in vertex order)."""
    if labels is None:
        labels = range(1, graph.n + 1)
    return LabelledDigraph(graph, tuple(int(x) for x in labels))


def relabel(lg: LabelledDigraph, sigma) -> LabelledDigraph:
    """Compose the labelling with sigma (a mapping on the label set)."""
    if not isinstance(sigma, dict):
        sigma = {i + 1: v for i, v in enumerate(sigma)}
    return LabelledDigraph(lg.graph, tuple(sigma[l] for l in lg.labels))


def standardize_labels(lg: LabelledDigraph) -> LabelledDigraph:
    """Order-preserving relabelling onto 1..n."""
    rank = {l: i + 1 for i, l in enumerate(sorted(lg.labels))}
    return LabelledDigraph(lg.graph, tuple(rank[l] for l in lg.labels))


# ---------------------------------------------------------------------------
# combination operators

def combine(kind: str, g1: EdgeColouredDigraph, g2: EdgeColouredDigraph) -> EdgeColouredDigraph:
    """Disjoint union, or the dashed/solid/double sum of two digraphs.

    The three sums additionally connect every vertex of g1 to every
    vertex of g2 with the respective edge colour.
    """
    if kind not in COMBINE_KINDS:
        raise ValueError(f"unknown combination kind {kind!r}")
    shift = g1.n
    edges = set(g1.edges)
    edges.update((u + shift, v + shift, c) for u, v, c in g2.edges)
    if kind != "disjoint":
        cross = _CROSS[kind]
        edges.update((a, b + shift, cross) for a in range(g1.n) for b in range(g2.n))
    return EdgeColouredDigraph(g1.n + g2.n, frozenset(edges))


def combine_chain(kind: str, graphs) -> EdgeColouredDigraph:
    """Left fold of combine over a sequence (empty sequence gives the empty digraph)."""
    out = EMPTY
    for g in graphs:
        out = combine(kind, out, g)
    return out


def combine_labelled(kind: str, lg1: LabelledDigraph, lg2: LabelledDigraph,
                     shift: bool = False) -> LabelledDigraph:
    """Labelled combination; label sets must be disjoint unless shift is set,
    in which case |V(g1)| is added to every label of lg2."""
    labels2 = lg2.labels
    if shift:
        labels2 = tuple(l + lg1.graph.n for l in labels2)
    if set(lg1.labels) & set(labels2):
        raise ValueError("label sets overlap (pass shift=True to auto-shift)")
    return LabelledDigraph(combine(kind, lg1.graph, lg2.graph), lg1.labels + labels2)


def combine_chain_labelled(kind: str, lgs) -> LabelledDigraph:
    out = labelled(EMPTY)
    for lg in lgs:
        out = combine_labelled(kind, out, lg)
    return out


# ---------------------------------------------------------------------------
# named families

def atom(kind: str, n: int) -> EdgeColouredDigraph:
    """The building-block digraphs.

    C(n): directed cycle of double edges (C(1) is a bare vertex, C(2) has
    both ordered pairs); P(n): solid path; Q(n): double path; K(n):
    complete dashed digraph with edges oriented low to high.
    """
    if n < 1:
        raise ValueError("atoms need at least one vertex")
    if kind == "C":
        if n == 1:
            return make(1)
        edges = [(i, i + 1, LEQ) for i in range(n - 1)] + [(n - 1, 0, LEQ)]
        return make(n, edges)
    if kind == "P":
        return make(n, [(i, i + 1, LT) for i in range(n - 1)])
    if kind == "Q":
        return make(n, [(i, i + 1, LEQ) for i in range(n - 1)])
    if kind == "K":
        return make(n, [(i, j, NEQ) for i in range(n) for j in range(i + 1, n)])
    raise ValueError(f"unknown atom kind {kind!r}")


def atom_labelled(kind: str, label_set) -> LabelledDigraph:
    """Labelled atom on the given label set.

    P and Q carry increasing labels along the path (required); C and K
    accept any labelling, and the increasing one is the canonical choice.
    """
    labels = tuple(sorted(set(int(x) for x in label_set)))
    if not labels:
        raise ValueError("label set must be nonempty")
    return LabelledDigraph(atom(kind, len(labels)), labels)


def grid(lam) -> EdgeColouredDigraph:
    """Row/column digraph of a partition: solid edges down each column,
    double edges along each row. Its expansion is the Schur function."""
    lam = partition(lam)
    return _grid(lam, strict_first_column_only=False, row_strict=False)


def comp_grid(alpha, row_strict: bool = False) -> EdgeColouredDigraph:
    """Composition grid with the column condition kept only in the first
    column; row_strict swaps the roles of the two edge colours."""
    alpha = composition(alpha)
    return _grid(alpha, strict_first_column_only=True, row_strict=row_strict)


def _grid(rows, strict_first_column_only, row_strict):
    cells = [(i, j) for i, row_len in enumerate(rows) for j in range(row_len)]
    index = {cell: v for v, cell in enumerate(cells)}
    down, along = (LEQ, LT) if row_strict else (LT, LEQ)
    edges = []
    for (i, j), v in index.items():
        if (i, j + 1) in index:
            edges.append((v, index[(i, j + 1)], along))
        if (i + 1, j) in index and (j == 0 or not strict_first_column_only):
            edges.append((v, index[(i + 1, j)], down))
    return make(len(cells), edges)


def from_poset(relations, elements=None) -> LabelledDigraph:
    """Cover-edge digraph of a labelled poset.

    relations: pairs (a, b) meaning a < b in the poset; elements: the
    underlying label set (defaults to everything mentioned). A cover
    (a, b) becomes a double edge when a < b as integers and a solid edge
    when a > b, so proper colourings match the poset's partitions.
    """
    rel = [(int(a), int(b)) for a, b in relations]
    if elements is None:
        elements = {x for pair in rel for x in pair}
    elements = sorted(set(int(x) for x in elements))
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    less = [[False] * n for _ in range(n)]
    for a, b in rel:
        if a not in index or b not in index:
            raise ValueError(f"relation ({a},{b}) mentions unknown element")
        less[index[a]][index[b]] = True
    for k in range(n):
        for i in range(n):
            if less[i][k]:
                for j in range(n):
                    if less[k][j]:
                        less[i][j] = True
    for i in range(n):
        if less[i][i]:
            raise ValueError("relations contain a cycle")
    edges = []
    for i in range(n):
        for j in range(n):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(n)):
                kind = LEQ if elements[i] < elements[j] else LT
                edges.append((i, j, kind))
    return LabelledDigraph(make(n, edges), tuple(elements))


# ---------------------------------------------------------------------------
# simple graphs and the classical specializations

@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on 0..n-1."""

    n: int
    edges: frozenset

    def edge_list(self):
        return sorted(self.edges)

    def neighbours(self, v: int):
        return sorted(set(b for a, b in self.edges if a == v)
                      | set(a for a, b in self.edges if b == v))


def simple_graph(n: int, edges=()) -> SimpleGraph:
    out = set()
    for a, b in edges:
        a, b = int(a), int(b)
        if a == b:
            raise ValueError("loops are not allowed")
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"vertex out of range in edge ({a},{b})")
        out.add((min(a, b), max(a, b)))
    return SimpleGraph(n, frozenset(out))


def from_graph(h: SimpleGraph, mode: str = "plain") -> EdgeColouredDigraph:
    """All-dashed digraph of a graph.

    mode "plain" picks an arbitrary orientation (low to high); "by_label"
    orients low to high, which is the ascent convention for chromatic
    quasisymmetric functions of labelled graphs.
    """
    if mode not in ("plain", "by_label"):
        raise ValueError(f"unknown mode {mode!r}")
    return make(h.n, [(a, b, NEQ) for a, b in h.edge_list()])


def from_digraph_dashed(d: EdgeColouredDigraph) -> EdgeColouredDigraph:
    """Replace every edge's constraint with NEQ, keeping directions."""
    return make(d.n, [(u, v, NEQ) for u, v, _ in d.edge_list()])


def from_weighted(h: SimpleGraph, weights) -> EdgeColouredDigraph:
    """Cycle-blowup of a weighted graph: a double cycle per vertex, plus a
    dashed edge between fixed representatives of adjacent vertices."""
    weights = [int(weights[v]) for v in range(h.n)]
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive")
    offsets = []
    total = 0
    parts = []
    for w in weights:
        offsets.append(total)
        parts.append(atom("C", w))
        total += w
    g = combine_chain("disjoint", parts)
    edges = set(g.edges)
    edges.update((offsets[a], offsets[b], NEQ) for a, b in h.edge_list())
    return EdgeColouredDigraph(total, frozenset(edges))


def underlying_graph(d: EdgeColouredDigraph) -> SimpleGraph:
    return simple_graph(d.n, [(u, v) for u, v, _ in d.edges])


# ---------------------------------------------------------------------------
# structural analyses

@dataclass(frozen=True)
class Contraction:
    """Vertices forced equal by directed double-edge cycles.

    classes: strongly connected components of the double-edge subgraph,
    ordered by minimum vertex;  weights: class sizes;  feasible: False
    exactly when a dashed or solid edge joins two vertices of one class
    (no proper colouring exists);  edges: the original edges between
    distinct classes, as (class_i, class_j, constraint) with original
    multiplicity.
    """

    classes: tuple
    class_of: tuple[int, ...]
    weights: tuple[int, ...]
    feasible: bool
    edges: tuple


def contract(g: EdgeColouredDigraph) -> Contraction:
    comps = _sccs(g.n, [(u, v) for u, v, c in g.edges if c is LEQ])
    comps.sort(key=min)
    class_of = [0] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            class_of[v] = i
    feasible = True
    class_edges = []
    for u, v, c in g.edge_list():
        cu, cv = class_of[u], class_of[v]
        if cu == cv:
            if c is not LEQ:
                feasible = False
        else:
            class_edges.append((cu, cv, c))
    return Contraction(
        classes=tuple(tuple(sorted(comp)) for comp in comps),
        class_of=tuple(class_of),
        weights=tuple(len(comp) for comp in comps),
        feasible=feasible,
        edges=tuple(class_edges),
    )


def _sccs(n: int, arcs) -> list[list[int]]:
    """Strongly connected components (Kosaraju, iterative)."""
    fwd = [[] for _ in range(n)]
    bwd = [[] for _ in range(n)]
    for u, v in arcs:
        fwd[u].append(v)
        bwd[v].append(u)
    order = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        stack = [(root, iter(fwd[root]))]
        seen[root] = True
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(fwd[w])))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    comp_of = [-1] * n
    comps = []
    for root in reversed(order):
        if comp_of[root] != -1:
            continue
        comp = []
        stack = [root]
        comp_of[root] = len(comps)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in bwd[v]:
                if comp_of[w] == -1:
                    comp_of[w] = len(comps)
                    stack.append(w)
        comps.append(comp)
    return comps


def induced(g: EdgeColouredDigraph, vertices) -> EdgeColouredDigraph:
    """Induced subdigraph, vertices renumbered 0..|S|-1 in sorted order."""
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v], c) for u, v, c in g.edges
             if u in index and v in index]
    return make(len(verts), edges)


def induced_labelled(lg: LabelledDigraph, vertices, standardize: bool = True) -> LabelledDigraph:
    """Induced labelled subdigraph; labels standardized onto 1..|S| by default."""
    verts = sorted(set(vertices))
    out = LabelledDigraph(induced(lg.graph, verts), tuple(lg.labels[v] for v in verts))
    return standardize_labels(out) if standardize else out


def closed_subsets(g: EdgeColouredDigraph):
    """All S with every solid or double edge out of S staying inside S.

    These index the digraph-side coproduct. The empty set and the full
    vertex set are always included. Enumeration is the plain 2^n sweep
    with an O(edges) closure test per subset.
    """
    forcing = [(u, v) for u, v, c in g.edge_list() if c is not NEQ]
    out = []
    for mask in range(1 << g.n):
        if all(not (mask >> u) & 1 or (mask >> v) & 1 for u, v in forcing):
            out.append(tuple(v for v in range(g.n) if (mask >> v) & 1))
    out.sort(key=lambda s: (len(s), s))
    return out


# ---------------------------------------------------------------------------
# orientations and balance

def orientations(h: SimpleGraph, constraint: EdgeConstraint = LT):
    """All 2^|E| orientations of a graph, as digraphs with one edge colour."""
    edge_pairs = h.edge_list()
    out = []
    for flips in itertools.product((False, True), repeat=len(edge_pairs)):
        edges = [((b, a, constraint) if flip else (a, b, constraint))
                 for (a, b), flip in zip(edge_pairs, flips)]
        out.append(make(h.n, edges))
    return out


def simple_cycles(h: SimpleGraph):
    """Every cycle of the graph once, as a vertex tuple starting at its
    smallest vertex with the smaller neighbour second."""
    adj = {v: set(h.neighbours(v)) for v in range(h.n)}
    cycles = []

    def extend(path, allowed):
        last = path[-1]
        for nxt in sorted(adj[last] & allowed):
            if nxt == path[0] and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
                continue
            if nxt in path:
                continue
            extend(path + [nxt], allowed)

    for start in range(h.n):
        allowed = {v for v in range(h.n) if v >= start}
        extend([start], allowed)
    return cycles


def is_k_balanced(orientation: EdgeColouredDigraph, k: int) -> bool:
    """Whether every weak cycle has at least k edges in each direction."""
    arcs = {(u, v) for u, v, _ in orientation.edges}
    for cycle in simple_cycles(underlying_graph(orientation)):
        forward = sum(1 for i in range(len(cycle))
                      if (cycle[i], cycle[(i + 1) % len(cycle)]) in arcs)
        if forward < k or len(cycle) - forward < k:
            return False
    return True


def colouring_orientation(h: SimpleGraph, colours) -> EdgeColouredDigraph:
    """Orientation induced by a proper colouring: edges point to the greater colour."""
    edges = []
    for a, b in h.edge_list():
        if colours[a] == colours[b]:
            raise ValueError("colouring is not proper")
        edges.append((a, b, LT) if colours[a] < colours[b] else (b, a, LT))
    return make(h.n, edges)


# ---------------------------------------------------------------------------
# digraphs realizing basis elements

def sym_basis_digraph(kind: str, lam) -> EdgeColouredDigraph:
    """The digraph whose expansion is the given symmetric-function basis
    element: m, maug, e, eaug, h, p, or s."""
    lam = partition(lam)
    if kind == "m":
        groups = []
        for size, grp in itertools.groupby(lam):
            copies = len(list(grp))
            groups.append(combine_chain("solid", [atom("C", size)] * copies))
        return combine_chain("dashed", groups)
    if kind == "maug":
        return combine_chain("dashed", [atom("C", p) for p in lam])
    if kind == "e":
        return combine_chain("disjoint", [atom("P", p) for p in lam])
    if kind == "eaug":
        return combine_chain("disjoint", [atom("K", p) for p in lam])
    if kind == "h":
        return combine_chain("disjoint", [atom("Q", p) for p in lam])
    if kind == "p":
        return combine_chain("disjoint", [atom("C", p) for p in lam])
    if kind == "s":
        return grid(lam)
    raise ValueError(f"unknown symmetric basis kind {kind!r}")


def qsym_basis_digraph(kind: str, alpha) -> EdgeColouredDigraph:
    """The digraph whose expansion is M, F, or Fbar at the composition."""
    alpha = composition(alpha)
    if kind == "M":
        return combine_chain("solid", [atom("C", p) for p in alpha])
    if kind == "F":
        return combine_chain("solid", [atom("Q", p) for p in alpha])
    if kind == "Fbar":
        return combine_chain("double", [atom("C", p) for p in alpha])
    raise ValueError(f"unknown quasisymmetric basis kind {kind!r}")


def r_basis_digraph(kind: str, beta, mu) -> EdgeColouredDigraph:
    """Digraph for an r-level basis element: kind M, S, Fbar, or Sbar.

    The composition side is a solid (M, S) or double (Fbar, Sbar) chain
    of double cycles; the partition side is a dashed chain of double
    cycles (M, Fbar) or the partition grid (S, Sbar); the two sides are
    joined by a dashed sum.
    """
    beta = composition(beta)
    mu = partition(mu)
    if kind in ("M", "S"):
        left = combine_chain("solid", [atom("C", p) for p in beta])
    elif kind in ("Fbar", "Sbar"):
        left = combine_chain("double", [atom("C", p) for p in beta])
    else:
        raise ValueError(f"unknown r-basis kind {kind!r}")
    if kind in ("M", "Fbar"):
        right = combine_chain("dashed", [atom("C", p) for p in mu])
    else:
        right = grid(mu)
    return combine("dashed", left, right)


def ncqsym_basis_digraph(kind: str, phi) -> LabelledDigraph:
    """Labelled digraph for M, F, or Fbar at a set composition."""
    if kind == "M":
        return combine_chain_labelled("solid", [atom_labelled("C", b) for b in phi])
    if kind == "F":
        return combine_chain_labelled("solid", [atom_labelled("Q", b) for b in phi])
    if kind == "Fbar":
        return combine_chain_labelled("double", [atom_labelled("C", b) for b in phi])
    raise ValueError(f"unknown noncommutative basis kind {kind!r}")


def ncsym_basis_digraph(kind: str, pi) -> LabelledDigraph:
    """Labelled digraph for the single-digraph NCSym bases: m, p, or e."""
    if kind == "m":
        return combine_chain_labelled("dashed", [atom_labelled("C", b) for b in pi])
    if kind == "p":
        return combine_chain_labelled("disjoint", [atom_labelled("C", b) for b in pi])
    if kind == "e":
        return combine_chain_labelled("disjoint", [atom_labelled("K", b) for b in pi])
    raise ValueError(f"no single digraph for NCSym basis kind {kind!r}")


def schur_labelled(lam) -> LabelledDigraph:
    """The partition grid labelled 1..n along rows (row-reading order)."""
    lam = partition(lam)
    return labelled(grid(lam))


# ---------------------------------------------------------------------------
# JSON and the builder DSL

def digraph_to_json(g) -> dict:
    if isinstance(g, LabelledDigraph):
        out = digraph_to_json(g.graph)
        out["labels"] = list(g.labels)
        return out
    return {
        "n": g.n,
        "edges": [[u, v, c.value] for u, v, c in g.edge_list()],
    }


def digraph_from_json(data):
    g = make(int(data["n"]), [(u, v, c) for u, v, c in data.get("edges", [])])
    if "labels" in data:
        return LabelledDigraph(g, tuple(int(x) for x in data["labels"]))
    return g


_DSL_ATOMS = {"C", "P", "Q", "K"}
_DSL_OPS = {"U": "disjoint", "D": "dashed", "S": "solid", "W": "double"}
_DSL_CHAINS = {"Uchain": "disjoint", "Dchain": "dashed",
               "Schain": "solid", "Wchain": "double"}


def parse_dsl(text: str) -> EdgeColouredDigraph:
    """Evaluate a builder expression.

    Atoms: C(n) P(n) Q(n) K(n), grid(parts...), cgrid(parts...),
    rcgrid(parts...) for the row-strict grid. Operators: U (disjoint),
    D (dashed), S (solid), W (double), each folding two or more
    arguments left to right; Uchain/Dchain/Schain/Wchain are synonyms.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of expression: {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, found {tok!r} in {text!r}")
        pos += 1
        return tok

    def parse_args(parse_item):
        take("(")
        args = [parse_item()]
        while peek() == ",":
            take(",")
            args.append(parse_item())
        take(")")
        return args

    def parse_int():
        tok = take()
        if not tok.isdigit():
            raise ValueError(f"expected an integer, found {tok!r}")
        return int(tok)

    def parse_expr():
        name = take()
        if name in _DSL_ATOMS:
            (n,) = parse_args(parse_int)
            return atom(name, n)
        if name == "grid":
            return grid(parse_args(parse_int))
        if name == "cgrid":
            return comp_grid(parse_args(parse_int))
        if name == "rcgrid":
            return comp_grid(parse_args(parse_int), row_strict=True)
        kind = _DSL_OPS.get(name) or _DSL_CHAINS.get(name)
        if kind is None:
            raise ValueError(f"unknown builder name {name!r}")
        return combine_chain(kind, parse_args(parse_expr))

    result = parse_expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input after expression: {text!r}")
    return result


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "(),":
            tokens.append(ch)
            i += 1
        elif ch.isalnum():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ValueError(f"bad character {ch!r} in {text!r}")
    return tokens
