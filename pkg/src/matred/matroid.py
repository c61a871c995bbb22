"""Matroids over a bitmask ground set.

Every representation only has to answer "is this set independent?";
rank, closure, bases and restriction are derived from that predicate.
Per-instance caches hold rank and closure values. They are filled with
deterministic values only, so concurrent readers at worst recompute an entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import AxiomViolation, UniverseTooLarge, WeightArityMismatch
from .subsets import (
    SetFamily,
    SubsetMask,
    check_universe,
    elements,
    format_set,
    full_mask,
    max_family,
    power_set,
    submasks,
)

CLOSURE_CHECK_CAP = 12


class Matroid:
    """Base class; subclasses implement :meth:`_indep`."""

    kind = "abstract"

    def __init__(self, universe_size: int, ground: SubsetMask | None = None):
        check_universe(universe_size)
        self.universe_size = universe_size
        self.ground = full_mask(universe_size) if ground is None else ground
        self._ranks: dict[int, int] = {}
        self._closures: dict[int, int] = {}

    def _indep(self, X: SubsetMask) -> bool:
        raise NotImplementedError

    def _rank(self, X: SubsetMask) -> int:
        # Greedy extension; any maximal independent subset is maximum by I3.
        indep = 0
        for e in elements(X):
            if self._indep(indep | (1 << e)):
                indep |= 1 << e
        return indep.bit_count()

    def _check(self, X: SubsetMask) -> None:
        if X < 0 or X & ~self.ground:
            raise ValueError(f"{format_set(max(X, 0))} is not a subset of the ground set {format_set(self.ground)}")

    def is_independent(self, X: SubsetMask) -> bool:
        self._check(X)
        return self._indep(X)

    def rank(self, X: SubsetMask) -> int:
        r = self._ranks.get(X)
        if r is None:
            self._check(X)
            r = self._ranks[X] = self._rank(X)
        return r

    @property
    def full_rank(self) -> int:
        return self.rank(self.ground)

    def closure(self, X: SubsetMask) -> SubsetMask:
        """All x with r(X + x) = r(X)."""
        c = self._closures.get(X)
        if c is None:
            r = self.rank(X)
            c = X
            for e in elements(self.ground & ~X):
                if self.rank(X | (1 << e)) == r:
                    c |= 1 << e
            self._closures[X] = c
        return c

    def is_closed(self, X: SubsetMask) -> bool:
        return self.closure(X) == X

    def independent_via_closure(self, X: SubsetMask) -> bool:
        """X is independent iff no x in X lies in the closure of X - x."""
        self._check(X)
        return all(not (self.closure(X & ~(1 << e)) >> e) & 1 for e in elements(X))

    def subsets(self) -> Iterable[SubsetMask]:
        """Subsets of the ground set in canonical order."""
        if self.ground == full_mask(self.universe_size):
            return power_set(self.universe_size)
        return (m for m in power_set(self.universe_size) if m & ~self.ground == 0)

    def independent_sets(self) -> SetFamily:
        return SetFamily.of(self.universe_size, (m for m in submasks(self.ground) if self._indep(m)))

    def bases(self) -> SetFamily:
        return max_family(self.independent_sets())

    def restriction(self, X: SubsetMask) -> "Matroid":
        self._check(X)
        return RestrictedMatroid(self, X)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.universe_size})"


class ExplicitMatroid(Matroid):
    """Independent sets given as a complete list.

    Use :func:`matroid_from_family` to build one; the constructor does not
    validate the axioms.
    """

    kind = "explicit"

    def __init__(self, family: SetFamily):
        super().__init__(family.universe_size)
        self.family = family
        self._members = family.as_set()

    def _indep(self, X):
        return X in self._members

    def _rank(self, X):
        # I2 makes the stored family complete, so a scan is exact.
        return max(m.bit_count() for m in self.family.members if m & ~X == 0)

    def independent_sets(self):
        return self.family


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, universe_size: int, k: int):
        super().__init__(universe_size)
        if not 0 <= k <= universe_size:
            raise ValueError(f"uniform rank k={k} must lie in [0, {universe_size}]")
        self.k = k

    def _indep(self, X):
        return X.bit_count() <= self.k

    def _rank(self, X):
        return min(X.bit_count(), self.k)


def gf2_independent(vectors: Iterable[int]) -> bool:
    """True iff the bit vectors are linearly independent over GF(2)."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            pivot = v.bit_length() - 1
            if pivot in basis:
                v ^= basis[pivot]
            else:
                basis[pivot] = v
                break
        else:
            return False
    return True


class Gf2Matroid(Matroid):
    """Column matroid of a binary matrix.

    ``rows`` are ints whose bit j is the entry in column j (element j).
    """

    kind = "gf2"

    def __init__(self, universe_size: int, rows: Sequence[int]):
        super().__init__(universe_size)
        limit = full_mask(universe_size)
        for r in rows:
            if r < 0 or r & ~limit:
                raise ValueError(f"matrix row {r:b} is wider than {universe_size} columns")
        self.rows = tuple(rows)
        self.columns = tuple(
            sum(((row >> j) & 1) << i for i, row in enumerate(self.rows)) for j in range(universe_size)
        )

    def _indep(self, X):
        return gf2_independent(self.columns[e] for e in elements(X))


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; edge i is element i. A self-loop is a matroid loop."""

    kind = "graphic"

    def __init__(self, num_vertices: int, edges: Sequence[tuple[int, int]]):
        super().__init__(len(edges))
        for u, v in edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge ({u + 1},{v + 1}) references a vertex outside 1..{num_vertices}")
        self.num_vertices = num_vertices
        self.edges = tuple((int(u), int(v)) for u, v in edges)

    def _indep(self, X):
        parent = list(range(self.num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in elements(X):
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


class PartitionMatroid(Matroid):
    kind = "partition"

    def __init__(self, universe_size: int, blocks: Sequence[SubsetMask], capacities: Sequence[int]):
        super().__init__(universe_size)
        if len(blocks) != len(capacities):
            raise ValueError("need exactly one capacity per block")
        seen = 0
        for b in blocks:
            if b <= 0 or b & ~self.ground:
                raise ValueError(f"block {format_set(max(b, 0))} is empty or outside the universe")
            if b & seen:
                raise ValueError(f"block {format_set(b)} overlaps an earlier block")
            seen |= b
        if seen != self.ground:
            raise ValueError(f"blocks do not cover the universe; missing {format_set(self.ground & ~seen)}")
        if any(c < 0 for c in capacities):
            raise ValueError("capacities must be non-negative")
        self.blocks = tuple(blocks)
        self.capacities = tuple(capacities)

    def _indep(self, X):
        return all((X & b).bit_count() <= c for b, c in zip(self.blocks, self.capacities))

    def _rank(self, X):
        return sum(min((X & b).bit_count(), c) for b, c in zip(self.blocks, self.capacities))


class RestrictedMatroid(Matroid):
    """M|X, keeping the original element labels; the ground set becomes X."""

    kind = "restriction"

    def __init__(self, parent: Matroid, X: SubsetMask):
        super().__init__(parent.universe_size, X & parent.ground)
        self.parent = parent

    def _indep(self, X):
        return self.parent._indep(X)

    def _rank(self, X):
        return self.parent.rank(X)


def matroid_from_family(n: int, family: SetFamily | Iterable[SubsetMask]) -> ExplicitMatroid:
    """Validate I1-I3 and wrap the family as a matroid.

    Raises AxiomViolation naming the axiom and the offending sets.
    """
    if not isinstance(family, SetFamily) or family.universe_size != n:
        family = SetFamily.of(n, family)
    members = family.as_set()
    if 0 not in members:
        raise AxiomViolation("I1", (0,), "the empty set is not independent")
    # I2: checking one-element deletions suffices by induction on size.
    for m in family.members:
        for e in elements(m):
            sub = m & ~(1 << e)
            if sub not in members:
                raise AxiomViolation("I2", (m, sub), f"{format_set(m)} is independent but its subset {format_set(sub)} is not")
    # I3: with I2 in place, pairs whose sizes differ by one suffice.
    by_size: dict[int, list[int]] = {}
    for m in family.members:
        by_size.setdefault(m.bit_count(), []).append(m)
    for k, small in sorted(by_size.items()):
        for a in small:
            for b in by_size.get(k + 1, ()):
                if not any((a | (1 << e)) in members for e in elements(b & ~a)):
                    raise AxiomViolation("I3", (a, b), f"{format_set(a)} cannot be augmented from {format_set(b)}")
    return ExplicitMatroid(family)


def as_explicit(M: Matroid) -> ExplicitMatroid:
    """Copy any matroid into the explicit-family representation."""
    return ExplicitMatroid(M.independent_sets())


def same_matroid(a: Matroid, b: Matroid) -> bool:
    return a.universe_size == b.universe_size and a.independent_sets() == b.independent_sets()


@dataclass(frozen=True)
class ClosureViolation:
    axiom: str
    witness: tuple[SubsetMask, ...]

    def __str__(self):
        return f"{self.axiom} violated at " + ", ".join(format_set(w) for w in self.witness)


def validate_closure_axioms(n: int, cl: Callable[[SubsetMask], SubsetMask]) -> ClosureViolation | None:
    """Check CL1-CL4 for ``cl`` over every subset of an n-element universe.

    Returns None if all four hold, else the first failing axiom (checked in
    the order CL1, CL2, CL3, CL4) with witness sets. CL2 is checked on
    one-element extensions, which implies it for all pairs by chaining.
    """
    if n > CLOSURE_CHECK_CAP:
        raise UniverseTooLarge(n, CLOSURE_CHECK_CAP)
    check_universe(n)
    universe = full_mask(n)
    subsets = list(power_set(n))
    table = {}
    for X in subsets:
        c = cl(X)
        if c < 0 or c & ~universe:
            raise ValueError(f"closure of {format_set(X)} leaves the universe")
        table[X] = c

    for X in subsets:
        if X & ~table[X]:
            return ClosureViolation("CL1", (X,))
    for X in subsets:
        for e in elements(universe & ~X):
            Y = X | (1 << e)
            if table[X] & ~table[Y]:
                return ClosureViolation("CL2", (X, Y))
    for X in subsets:
        if table.get(table[X], cl(table[X])) != table[X]:
            return ClosureViolation("CL3", (X,))
    for X in subsets:
        base = table[X]
        for x in range(n):
            grown = table[X | (1 << x)]
            for y in elements(grown & ~base):
                if not (table[X | (1 << y)] >> x) & 1:
                    return ClosureViolation("CL4", (X, 1 << x, 1 << y))
    return None


def check_weights(M: Matroid, weights: Sequence[float]) -> list[float]:
    if len(weights) != M.universe_size:
        raise WeightArityMismatch(len(weights), M.universe_size)
    out = [float(w) for w in weights]
    if not all(math.isfinite(w) for w in out):
        raise ValueError("weights must be finite")
    return out


def set_weight(X: SubsetMask, weights: Sequence[float]) -> float:
    return math.fsum(weights[e] for e in elements(X))


def greedy_max_weight_base(M: Matroid, weights: Sequence[float]) -> tuple[SubsetMask, float]:
    """Matroid greedy: scan elements by weight descending and keep each one
    that leaves the partial set independent.

    Ties go to the smaller element index. Negative weights are still
    scanned, so the result is always a base.
    """
    w = check_weights(M, weights)
    order = sorted(elements(M.ground), key=lambda e: (-w[e], e))
    chosen = 0
    for e in order:
        if M.is_independent(chosen | (1 << e)):
            chosen |= 1 << e
    return chosen, set_weight(chosen, w)


def best_base_weight(M: Matroid, weights: Sequence[float]) -> float:
    """Brute-force maximum total weight over all bases."""
    w = check_weights(M, weights)
    return max(set_weight(B, w) for B in M.bases())
