"""Dependence spaces: congruences on 2^U, consistent sets and reducts.

A congruence is stored as a kernel function that maps each subset to a
class key; two subsets are related iff their keys are equal. The closure
congruence of a matroid uses the closure itself as the key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

from .errors import RouteMismatch, UniverseTooLarge
from .hyperplanes import flat_lattice
from .matroid import Matroid
from .subsets import (
    SetFamily,
    SubsetMask,
    check_universe,
    elements,
    format_family,
    format_set,
    full_mask,
    min_family,
    power_set,
    submasks,
)

CONGRUENCE_CAP = 10
CONSISTENT_CAP = 20
DENSE_CAP = 12
VERIFY_CAP = 8


@dataclass(frozen=True)
class FromMatroidClosure:
    matroid: Matroid


@dataclass(frozen=True)
class FromFamilyGamma:
    family: SetFamily


@dataclass(frozen=True)
class Explicit:
    table: tuple


@dataclass(frozen=True)
class Congruence:
    universe_size: int
    kernel: Callable[[SubsetMask], Hashable] = field(compare=False)
    provenance: Any = None

    def key(self, X: SubsetMask) -> Hashable:
        return self.kernel(X)

    def related(self, X: SubsetMask, Y: SubsetMask) -> bool:
        return self.kernel(X) == self.kernel(Y)


@dataclass(frozen=True)
class DependenceSpace:
    universe_size: int
    theta: Congruence

    def key(self, X: SubsetMask) -> Hashable:
        return self.theta.kernel(X)


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    holds: bool
    witness: Any = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing report needs a witness")

    def line(self) -> str:
        if self.holds:
            return f"{self.theorem} HOLDS"
        return f"{self.theorem} FAILS witness={self.witness}"


def explicit_congruence(n: int, table) -> Congruence:
    """Congruence from a table indexed by subset mask (length 2**n)."""
    table = tuple(table)
    if len(table) != 1 << n:
        raise ValueError(f"table needs {1 << n} entries, got {len(table)}")
    return Congruence(n, table.__getitem__, Explicit(table))


def theta_from_matroid(M: Matroid) -> DependenceSpace:
    """The closure congruence: X ~ Y iff cl(X) = cl(Y)."""
    return DependenceSpace(M.universe_size, Congruence(M.universe_size, M.closure, FromMatroidClosure(M)))


def _as_congruence(C: Congruence | DependenceSpace) -> Congruence:
    return C.theta if isinstance(C, DependenceSpace) else C


def kernel_classes(C: Congruence | DependenceSpace) -> list[SetFamily]:
    """Equivalence classes of 2^U, ordered by their first member."""
    C = _as_congruence(C)
    classes: dict[Hashable, list[int]] = {}
    for X in power_set(C.universe_size):
        classes.setdefault(C.kernel(X), []).append(X)
    return [SetFamily(C.universe_size, tuple(ms)) for ms in classes.values()]


def expand_pairs(C: Congruence | DependenceSpace) -> set[tuple[SubsetMask, SubsetMask]]:
    """The relation as an explicit set of ordered pairs."""
    return {(a, b) for cls in kernel_classes(C) for a in cls for b in cls}


def is_congruence(C: Congruence | DependenceSpace, name: str = "congruence") -> TheoremReport:
    """Check that the kernel's relation is compatible with union.

    It suffices to check A ~ rep(A) implies A + x ~ rep(A) + x for every
    single element x: adding the elements of any B one at a time extends
    this to A1 + B ~ A2 + B, and transitivity gives A1 + B1 ~ A2 + B2.
    The witness is (A1, A2, B1, B2).
    """
    C = _as_congruence(C)
    n = C.universe_size
    if n > CONGRUENCE_CAP:
        raise UniverseTooLarge(n, CONGRUENCE_CAP)
    check_universe(n)
    keys = [None] * (1 << n)
    rep: dict[Hashable, int] = {}
    for X in power_set(n):
        keys[X] = k = C.kernel(X)
        rep.setdefault(k, X)
    for X in power_set(n):
        r = rep[keys[X]]
        if r == X:
            continue
        for x in range(n):
            b = 1 << x
            if keys[X | b] != keys[r | b]:
                return TheoremReport(name, False, tuple(format_set(s) for s in (r, X, b, b)))
    return TheoremReport(name, True)


def is_consistent_fast(S: DependenceSpace, X: SubsetMask) -> bool:
    """No single deletion stays in the class of X."""
    k = S.key(X)
    return all(S.key(X & ~(1 << e)) != k for e in elements(X))


def is_consistent_definitional(S: DependenceSpace, X: SubsetMask) -> bool:
    """X is minimal in its class: no proper subset shares its key."""
    k = S.key(X)
    return all(Y == X or S.key(Y) != k for Y in submasks(X))


def is_consistent(S: DependenceSpace, X: SubsetMask) -> bool:
    fast = is_consistent_fast(S, X)
    slow = is_consistent_definitional(S, X)
    if fast != slow:
        raise RouteMismatch(f"consistency of {format_set(X)}", deletion=fast, definition=slow)
    return fast


def consistent_sets(S: DependenceSpace) -> SetFamily:
    n = S.universe_size
    if n > CONSISTENT_CAP:
        raise UniverseTooLarge(n, CONSISTENT_CAP)
    return SetFamily(n, tuple(X for X in power_set(n) if is_consistent_fast(S, X)))


def reducts_by_definition(S: DependenceSpace, X: SubsetMask) -> SetFamily:
    """Consistent subsets of X in the class of X."""
    k = S.key(X)
    return SetFamily.of(
        S.universe_size, (Y for Y in submasks(X) if S.key(Y) == k and is_consistent_fast(S, Y))
    )


def reducts_by_minimality(S: DependenceSpace, X: SubsetMask) -> SetFamily:
    """Minimal members of {Y within X : Y ~ X}."""
    k = S.key(X)
    return min_family(SetFamily.of(S.universe_size, (Y for Y in submasks(X) if S.key(Y) == k)))


def reducts(S: DependenceSpace, X: SubsetMask) -> SetFamily:
    a = reducts_by_definition(S, X)
    b = reducts_by_minimality(S, X)
    if a != b:
        raise RouteMismatch(f"reducts of {format_set(X)}", definition=format_family(a), minimal=format_family(b))
    return a


def gamma_of_family(H: SetFamily) -> Congruence:
    """Relate two sets iff they lie in exactly the same members of H.

    The key is a bitmask over member indices.
    """
    members = H.members

    def kernel(X: SubsetMask) -> int:
        key = 0
        for i, h in enumerate(members):
            if X & ~h == 0:
                key |= 1 << i
        return key

    return Congruence(H.universe_size, kernel, FromFamilyGamma(H))


def same_partition(a: Congruence, b: Congruence, n: int) -> tuple[SubsetMask, SubsetMask] | None:
    """None if the kernels induce the same partition of 2^U, else a pair
    (X, Y) related by exactly one of them."""
    a_rep: dict[Hashable, int] = {}
    b_rep: dict[Hashable, int] = {}
    for X in power_set(n):
        ka, kb = a.kernel(X), b.kernel(X)
        ra = a_rep.setdefault(ka, X)
        rb = b_rep.setdefault(kb, X)
        if ra != rb:
            # X joins an existing class under one kernel only.
            Y = ra if ra != X else rb
            return (Y, X)
    return None


def is_dense(H: SetFamily, S: DependenceSpace, name: str = "dense") -> TheoremReport:
    n = S.universe_size
    if n > DENSE_CAP:
        raise UniverseTooLarge(n, DENSE_CAP)
    if H.universe_size != n:
        raise ValueError("family and space have different universes")
    diff = same_partition(gamma_of_family(H), S.theta, n)
    if diff is None:
        return TheoremReport(name, True)
    return TheoremReport(name, False, tuple(format_set(s) for s in diff))


def com_family(H: SetFamily, X: SubsetMask) -> SetFamily:
    """Nonempty differences X - h for h in H."""
    return SetFamily.of(H.universe_size, (X & ~h for h in H if X & ~h))


def reducts_via_transversals(H: SetFamily, X: SubsetMask) -> SetFamily:
    """Minimal subsets of X meeting every member of com_family(H, X).

    Candidates outside X are never minimal (dropping an outside element
    keeps every intersection), so only subsets of X are searched.
    """
    targets = com_family(H, X).members
    hits = (B for B in submasks(X) if all(B & t for t in targets))
    return min_family(SetFamily.of(H.universe_size, hits))


def _report(name: str, failure) -> TheoremReport:
    return TheoremReport(name, failure is None, failure)


THEOREMS = (
    "closure-congruence",
    "consistent-equals-independent",
    "reducts-equal-restriction-bases",
    "bases-minimal-same-closure",
    "hyperplanes-dense",
    "bases-hyperplane-transversals",
    "base-closure-equals-set-closure",
)


def verify_paper_theorems(M: Matroid) -> list[TheoremReport]:
    """Exhaustively check the seven reduct/base identities for M.

    Every identity is evaluated for every X within the ground set; the
    witness of a failure names the first X (canonical order) that breaks it.
    """
    n = M.universe_size
    if n > VERIFY_CAP:
        raise UniverseTooLarge(n, VERIFY_CAP)
    if M.ground != full_mask(n):
        raise ValueError("verification needs a matroid on the full universe")
    S = theta_from_matroid(M)
    H = flat_lattice(M).hyperplanes

    reports = [is_congruence(S, THEOREMS[0])]

    ind = consistent_sets(S)
    indep = M.independent_sets()
    fail = None
    if ind != indep:
        odd = sorted(ind.as_set() ^ indep.as_set())
        fail = f"first differing set {format_set(odd[0])}"
    reports.append(_report(THEOREMS[1], fail))

    red_fail = min_fail = trans_fail = lemma_fail = None
    for X in power_set(n):
        bx = M.restriction(X).bases()
        if red_fail is None:
            red = reducts_by_definition(S, X)
            if red != bx:
                red_fail = f"X={format_set(X)} reducts={red} bases={bx}"
        if min_fail is None:
            cx = M.closure(X)
            mins = min_family(SetFamily.of(n, (Y for Y in submasks(X) if M.closure(Y) == cx)))
            if mins != bx:
                min_fail = f"X={format_set(X)} minimal={mins} bases={bx}"
        if trans_fail is None:
            tr = reducts_via_transversals(H, X)
            if tr != bx:
                trans_fail = f"X={format_set(X)} transversals={tr} bases={bx}"
        if lemma_fail is None:
            for B in bx:
                if M.closure(B) != M.closure(X):
                    lemma_fail = f"X={format_set(X)} B={format_set(B)}"
                    break

    reports.append(_report(THEOREMS[2], red_fail))
    reports.append(_report(THEOREMS[3], min_fail))
    reports.append(is_dense(H, S, THEOREMS[4]))
    reports.append(_report(THEOREMS[5], trans_fail))
    reports.append(_report(THEOREMS[6], lemma_fail))
    return reports
