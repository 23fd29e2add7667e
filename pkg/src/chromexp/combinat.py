"""Indexing combinatorics: compositions, partitions, set compositions,
set partitions, their r-level pairs, standardization, and the three
shuffle products used by the expression algebras.

Conventions
-----------
* A composition is a tuple of positive ints; () is the empty composition.
* A partition is a weakly decreasing composition.
* A set composition is a tuple of blocks, each block a strictly
  increasing tuple of positive ints; block order is meaningful.
* A set partition is a tuple of blocks, each strictly increasing,
  with the blocks sorted by their minimum element.
* Permutations are one-line words: tuples that rearrange 1..n.

All values are immutable and hashable, so they can key term maps.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from math import factorial

#: Sentinel for the r = infinity level (all parts land on the partition side).
INFINITY = math.inf


# ---------------------------------------------------------------------------
# compositions and partitions

def composition(parts) -> tuple[int, ...]:
    """Validate and normalize a composition."""
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    return alpha


def partition(parts) -> tuple[int, ...]:
    """Validate a partition (weakly decreasing positive parts)."""
    lam = composition(parts)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not weakly decreasing: {lam}")
    return lam


def descent_set(alpha) -> frozenset[int]:
    """Partial sums of all but the last part, a subset of [size-1]."""
    sums = []
    acc = 0
    for part in alpha[:-1]:
        acc += part
        sums.append(acc)
    return frozenset(sums)


def composition_from_descents(subset, n: int) -> tuple[int, ...]:
    """Inverse of descent_set for compositions of n."""
    cuts = sorted(subset)
    if any(not 1 <= s <= n - 1 for s in cuts):
        raise ValueError(f"{subset} is not a subset of [{n - 1}]")
    prev = 0
    parts = []
    for s in cuts + [n]:
        parts.append(s - prev)
        prev = s
    if n == 0:
        return ()
    return tuple(parts)


def compositions(n: int):
    """All compositions of n, in graded-lex order of cut sets."""
    if n == 0:
        yield ()
        return
    for size in range(n):
        for cuts in itertools.combinations(range(1, n), size):
            yield composition_from_descents(cuts, n)


def coarsens(alpha, beta) -> bool:
    """True iff alpha coarsens beta, i.e. set(alpha) is a subset of set(beta)."""
    if sum(alpha) != sum(beta):
        raise ValueError(f"sizes differ: {alpha} vs {beta}")
    return descent_set(alpha) <= descent_set(beta)


def coarsenings(alpha):
    """All compositions gamma that coarsen alpha (merge runs of adjacent parts)."""
    n = sum(alpha)
    cuts = sorted(descent_set(alpha))
    out = []
    for size in range(len(cuts) + 1):
        for chosen in itertools.combinations(cuts, size):
            out.append(composition_from_descents(chosen, n))
    return out


def refinements(alpha):
    """All compositions beta refined by alpha (set(beta) contains set(alpha))."""
    n = sum(alpha)
    base = descent_set(alpha)
    free = [s for s in range(1, n) if s not in base]
    out = []
    for size in range(len(free) + 1):
        for extra in itertools.combinations(free, size):
            out.append(composition_from_descents(base | set(extra), n))
    return out


def partitions(n: int):
    """All partitions of n, largest part first, in reverse lex order."""
    if n == 0:
        yield ()
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def sort_to_partition(alpha) -> tuple[int, ...]:
    """The decreasing rearrangement of a composition."""
    return tuple(sorted(alpha, reverse=True))


def dominance_leq(mu, lam) -> bool:
    """Whether mu is dominated by lam (mu <= lam in dominance).

    Requires len(lam) <= len(mu) and every prefix sum of mu to be at most
    the corresponding prefix sum of lam.
    """
    if sum(mu) != sum(lam):
        raise ValueError(f"sizes differ: {mu} vs {lam}")
    if len(lam) > len(mu):
        return False
    acc_m = acc_l = 0
    for i in range(len(lam)):
        acc_m += mu[i]
        acc_l += lam[i]
        if acc_m > acc_l:
            return False
    return True


def lambda_factorial(lam) -> int:
    """Product of the factorials of the parts."""
    out = 1
    for p in lam:
        out *= factorial(p)
    return out


def lambda_superfactorial(lam) -> int:
    """Product of the factorials of the part multiplicities."""
    out = 1
    for _, group in itertools.groupby(lam):
        out *= factorial(len(list(group)))
    return out


def distinct_rearrangements(lam):
    """All distinct compositions with the same multiset of parts."""
    seen = set()
    for perm in itertools.permutations(lam):
        if perm not in seen:
            seen.add(perm)
            yield perm


# ---------------------------------------------------------------------------
# permutations and words

def permutation(word) -> tuple[int, ...]:
    sigma = tuple(int(w) for w in word)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"not a permutation of 1..{len(sigma)}: {sigma}")
    return sigma


def permutation_inverse(sigma) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v - 1] = i + 1
    return tuple(inv)


def standardize_word(word) -> tuple[int, ...]:
    """std(w): rank each letter, ties broken left to right."""
    w = tuple(word)
    if not w:
        raise ValueError("cannot standardize the empty word")
    out = []
    for i, wi in enumerate(w):
        smaller = sum(1 for wj in w if wj < wi)
        equal_left = sum(1 for wj in w[: i + 1] if wj == wi)
        out.append(smaller + equal_left)
    return tuple(out)


def descents(sigma) -> tuple[int, ...]:
    """Positions i with sigma(i) > sigma(i+1)."""
    return tuple(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def runs_set_composition(sigma) -> tuple[tuple[int, ...], ...]:
    """Maximal increasing runs of the one-line word, as a set composition.

    The final run is always included.
    """
    sigma = permutation(sigma)
    if not sigma:
        return ()
    blocks = []
    current = [sigma[0]]
    for v in sigma[1:]:
        if v > current[-1]:
            current.append(v)
        else:
            blocks.append(tuple(current))
            current = [v]
    blocks.append(tuple(current))
    return tuple(blocks)


# ---------------------------------------------------------------------------
# set compositions and set partitions

def set_composition(blocks) -> tuple[tuple[int, ...], ...]:
    """Canonical form: block order kept, block interiors sorted."""
    out = tuple(tuple(sorted(int(x) for x in b)) for b in blocks)
    _check_blocks(out)
    return out


def set_partition(blocks) -> tuple[tuple[int, ...], ...]:
    """Canonical form: interiors sorted, blocks ordered by minimum."""
    out = tuple(sorted((tuple(sorted(int(x) for x in b)) for b in blocks),
                       key=lambda b: b[0] if b else 0))
    _check_blocks(out)
    return out


def _check_blocks(blocks):
    seen = set()
    for b in blocks:
        if not b:
            raise ValueError("blocks must be nonempty")
        for x in b:
            if x < 1:
                raise ValueError(f"ground-set elements must be positive: {x}")
            if x in seen:
                raise ValueError(f"blocks must be disjoint; {x} repeats")
            seen.add(x)


def ground_set(blocks) -> frozenset[int]:
    return frozenset(x for b in blocks for x in b)


def shape(blocks) -> tuple[int, ...]:
    """Block sizes in block order (a composition)."""
    return tuple(len(b) for b in blocks)


def shape_partition(blocks) -> tuple[int, ...]:
    """Block sizes sorted decreasingly (a partition)."""
    return tuple(sorted((len(b) for b in blocks), reverse=True))


def set_compositions(n: int):
    """All set compositions of [n]."""
    for pi in set_partitions(n):
        for order in itertools.permutations(pi):
            yield tuple(order)


def set_partitions(n: int):
    """All set partitions of [n], in canonical order."""
    def rec(elements):
        if not elements:
            yield ()
            return
        first, rest = elements[0], elements[1:]
        for size in range(len(rest) + 1):
            for mates in itertools.combinations(rest, size):
                block = (first,) + mates
                remaining = tuple(x for x in rest if x not in mates)
                for tail in rec(remaining):
                    yield (block,) + tail

    yield from rec(tuple(range(1, n + 1)))


def standardize_set_composition(phi):
    rank = _ranks(ground_set(phi))
    return set_composition(tuple(rank[x] for x in b) for b in phi)


def standardize_set_partition(pi):
    rank = _ranks(ground_set(pi))
    return set_partition(tuple(rank[x] for x in b) for b in pi)


def _ranks(elements) -> dict[int, int]:
    return {x: i + 1 for i, x in enumerate(sorted(elements))}


def corrupts(psi, phi) -> bool:
    """Whether psi is phi with some bars removed.

    Removing a bar merges two adjacent blocks; the merged elements are
    rewritten in increasing order afterwards, so any run of adjacent
    blocks may merge.
    """
    if ground_set(psi) != ground_set(phi):
        raise ValueError("ground sets differ")
    return set_composition(psi) in corruptions(phi)


def corruptions(phi) -> set[tuple[tuple[int, ...], ...]]:
    """All set compositions obtained from phi by removing bars."""
    phi = set_composition(phi)
    k = len(phi)
    out = set()
    for cuts in _cut_choices(k):
        merged = []
        start = 0
        for end in cuts:
            merged.append(tuple(sorted(x for b in phi[start:end] for x in b)))
            start = end
        out.add(tuple(merged))
    return out


def reforms(phi, psi) -> bool:
    """Whether phi is psi with some bars added.

    A bar may only be inserted inside a block's increasing writing, so
    each block of psi must split into consecutive pieces of its sorted
    elements, in increasing order.
    """
    if ground_set(phi) != ground_set(psi):
        raise ValueError("ground sets differ")
    return set_composition(phi) in reformations(psi)


def reformations(psi) -> set[tuple[tuple[int, ...], ...]]:
    """All set compositions obtained from psi by adding bars."""
    psi = set_composition(psi)
    per_block = []
    for block in psi:
        pieces = []
        for cuts in _cut_choices(len(block)):
            start = 0
            split = []
            for end in cuts:
                split.append(block[start:end])
                start = end
            pieces.append(tuple(split))
        per_block.append(pieces)
    out = set()
    for choice in itertools.product(*per_block):
        out.add(tuple(piece for split in choice for piece in split))
    return out


def _cut_choices(k: int):
    """All increasing cut sequences of 1..k ending at k (k = 0 gives one empty way)."""
    if k == 0:
        yield ()
        return
    for inner in itertools.chain.from_iterable(
            itertools.combinations(range(1, k), size) for size in range(k)):
        yield inner + (k,)


def restrict(phi, subset) -> tuple[tuple[int, ...], ...]:
    """Intersect each block with the subset and drop empty blocks."""
    subset = set(subset)
    return tuple(tuple(x for x in b if x in subset)
                 for b in phi if any(x in subset for x in b))


# ---------------------------------------------------------------------------
# shuffle products

def quasi_shuffle(alpha, beta) -> dict[tuple[int, ...], int]:
    """Overlapping shuffle of two compositions, as a multiset.

    Interleavings in which one part of alpha and one part of beta may
    merge by addition; the multiplicities realize the product of
    monomial quasisymmetric functions.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    out: dict[tuple[int, ...], int] = {}

    def rec(a, b, prefix):
        if not a:
            key = prefix + b
            out[key] = out.get(key, 0) + 1
            return
        if not b:
            key = prefix + a
            out[key] = out.get(key, 0) + 1
            return
        rec(a[1:], b, prefix + (a[0],))
        rec(a, b[1:], prefix + (b[0],))
        rec(a[1:], b[1:], prefix + (a[0] + b[0],))

    rec(alpha, beta, ())
    return out


def shifted_quasi_shuffle(phi, psi) -> set[tuple[tuple[int, ...], ...]]:
    """All set compositions restricting to phi on [n] and to a shift of psi above.

    Ground sets must be initial segments [n] and [m]; the result lives
    on [n + m].
    """
    phi = set_composition(phi)
    psi = set_composition(psi)
    n = _initial_segment_size(phi)
    _initial_segment_size(psi)
    shifted = tuple(tuple(x + n for x in b) for b in psi)
    out = set()

    def rec(a, b, prefix):
        if not a:
            out.add(prefix + b)
            return
        if not b:
            out.add(prefix + a)
            return
        rec(a[1:], b, prefix + (a[0],))
        rec(a, b[1:], prefix + (b[0],))
        rec(a[1:], b[1:], prefix + (tuple(sorted(a[0] + b[0])),))

    rec(phi, shifted, ())
    return out


def _initial_segment_size(phi) -> int:
    ground = ground_set(phi)
    n = len(ground)
    if ground != frozenset(range(1, n + 1)):
        raise ValueError(f"ground set must be an initial segment: {sorted(ground)}")
    return n


def bar_shuffle(phi, pi) -> set[tuple[tuple[int, ...], ...]]:
    """Arrange the blocks of phi and pi into one sequence.

    The blocks of phi keep their relative order; the blocks of pi go
    anywhere in any order; no blocks merge.
    """
    phi = set_composition(phi)
    pi = set_partition(pi)
    if ground_set(phi) & ground_set(pi):
        raise ValueError("ground sets overlap")
    k, l = len(phi), len(pi)
    out = set()
    for positions in itertools.combinations(range(k + l), k):
        pos_set = set(positions)
        rest = [i for i in range(k + l) if i not in pos_set]
        for order in itertools.permutations(pi):
            blocks = [None] * (k + l)
            for slot, block in zip(positions, phi):
                blocks[slot] = block
            for slot, block in zip(rest, order):
                blocks[slot] = block
            out.add(tuple(blocks))
    return out


def r_split(upsilon, r):
    """Split a set composition into its r-level pair.

    Blocks of size >= r, in order, form the set-composition part; the
    rest form the set-partition part. The input is recovered as an
    element of bar_shuffle of the output.
    """
    upsilon = set_composition(upsilon)
    phi = tuple(b for b in upsilon if len(b) >= r)
    pi = set_partition(b for b in upsilon if len(b) < r)
    return phi, pi


# ---------------------------------------------------------------------------
# the partition lattice

def partition_refines(pi, omega) -> bool:
    """Whether every block of pi is contained in some block of omega."""
    lookup = {}
    for i, block in enumerate(omega):
        for x in block:
            lookup[x] = i
    return all(len({lookup[x] for x in block}) == 1 for block in pi)


def partition_meet(pi, omega) -> tuple[tuple[int, ...], ...]:
    """Greatest lower bound: pairwise block intersections, empties dropped."""
    if ground_set(pi) != ground_set(omega):
        raise ValueError("ground sets differ")
    blocks = []
    for a in pi:
        sa = set(a)
        for b in omega:
            common = sa.intersection(b)
            if common:
                blocks.append(tuple(sorted(common)))
    return set_partition(blocks)


# ---------------------------------------------------------------------------
# r-compositions and r-set-compositions

def _check_r(r):
    if r is INFINITY:
        return
    if not (isinstance(r, int) and r >= 1):
        raise ValueError(f"r must be a positive integer or INFINITY: {r!r}")


@dataclass(frozen=True)
class RComposition:
    """A pair (beta, mu): beta with parts >= r, mu a partition with parts < r."""

    r: object
    beta: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        _check_r(self.r)
        object.__setattr__(self, "beta", composition(self.beta))
        object.__setattr__(self, "mu", partition(self.mu))
        if any(p < self.r for p in self.beta):
            raise ValueError(f"beta parts must be >= {self.r}: {self.beta}")
        if any(p >= self.r for p in self.mu):
            raise ValueError(f"mu parts must be < {self.r}: {self.mu}")

    def size(self) -> int:
        return sum(self.beta) + sum(self.mu)


@dataclass(frozen=True)
class RSetComposition:
    """A pair (phi, pi) whose shapes form an r-composition."""

    r: object
    phi: tuple[tuple[int, ...], ...]
    pi: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "phi", set_composition(self.phi))
        object.__setattr__(self, "pi", set_partition(self.pi))
        if ground_set(self.phi) & ground_set(self.pi):
            raise ValueError("ground sets of phi and pi overlap")
        RComposition(self.r, shape(self.phi), shape_partition(self.pi))

    def ground(self) -> frozenset[int]:
        return ground_set(self.phi) | ground_set(self.pi)

    def standardize(self) -> "RSetComposition":
        rank = _ranks(self.ground())
        return RSetComposition(
            self.r,
            tuple(tuple(rank[x] for x in b) for b in self.phi),
            tuple(tuple(rank[x] for x in b) for b in self.pi),
        )


def r_compositions(n: int, r):
    """All r-compositions of n."""
    _check_r(r)
    for mu_size in range(n + 1):
        beta_size = n - mu_size
        betas = [b for b in compositions(beta_size) if all(p >= r for p in b)]
        mus = [m for m in partitions(mu_size) if all(p < r for p in m)]
        for beta in betas:
            for mu in mus:
                yield RComposition(r, beta, mu)


def r_set_compositions(n: int, r):
    """All r-set-compositions of [n]."""
    _check_r(r)
    elements = tuple(range(1, n + 1))
    for a_size in range(n + 1):
        for a_set in itertools.combinations(elements, a_size):
            rest = tuple(x for x in elements if x not in a_set)
            phis = [phi for phi in _set_compositions_of(a_set)
                    if all(len(b) >= r for b in phi)]
            pis = [pi for pi in _set_partitions_of(rest)
                   if all(len(b) < r for b in pi)]
            for phi in phis:
                for pi in pis:
                    yield RSetComposition(r, phi, pi)


def _set_compositions_of(elements):
    for pi in _set_partitions_of(elements):
        yield from itertools.permutations(pi)


def _set_partitions_of(elements):
    elements = tuple(sorted(elements))
    if not elements:
        yield ()
        return
    relabel = dict(enumerate(elements, start=1))
    for pi in set_partitions(len(elements)):
        yield set_partition(tuple(relabel[x] for x in b) for b in pi)


# ---------------------------------------------------------------------------
# ordering and display

def composition_sort_key(alpha):
    """Graded lexicographic order for deterministic term iteration."""
    return (sum(alpha), alpha)


def set_composition_sort_key(phi):
    return (sum(len(b) for b in phi), shape(phi), phi)


def format_composition(alpha) -> str:
    return "(" + ",".join(str(p) for p in alpha) + ")"


def format_block(block) -> str:
    if any(x > 9 for x in block):
        return ",".join(str(x) for x in block)
    return "".join(str(x) for x in block)


def format_set_composition(phi) -> str:
    return "(" + "|".join(format_block(b) for b in phi) + ")"


def format_set_partition(pi) -> str:
    return "/".join(format_block(b) for b in pi) if pi else "{}"


# ---------------------------------------------------------------------------
# JSON forms

def r_value_to_json(r):
    return "inf" if r is INFINITY else r


def r_value_from_json(value):
    if value == "inf":
        return INFINITY
    return int(value)


def r_composition_to_json(rc: RComposition) -> dict:
    return {"r": r_value_to_json(rc.r), "comp": list(rc.beta), "part": list(rc.mu)}


def r_set_composition_to_json(rsc: RSetComposition) -> dict:
    return {
        "r": r_value_to_json(rsc.r),
        "comp": [list(b) for b in rsc.phi],
        "part": [list(b) for b in rsc.pi],
    }
