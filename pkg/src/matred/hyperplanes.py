"""Flats and hyperplanes, and closure recovered from hyperplanes."""

from __future__ import annotations

import threading
import weakref
from dataclasses import dataclass

from .errors import FullRankFlat, NotAFlat, RouteMismatch, UniverseTooLarge
from .matroid import Matroid
from .subsets import SetFamily, SubsetMask, format_family, format_set

FLAT_CAP = 20


@dataclass(frozen=True)
class FlatLattice:
    """All flats of a matroid, and the hyperplanes among them."""

    matroid: Matroid
    flats: SetFamily
    hyperplanes: SetFamily

    def containing(self, X: SubsetMask) -> SetFamily:
        """Hyperplanes H with X a subset of H."""
        return SetFamily(self.hyperplanes.universe_size, tuple(H for H in self.hyperplanes if X & ~H == 0))


_lattices: "weakref.WeakKeyDictionary[Matroid, FlatLattice]" = weakref.WeakKeyDictionary()
_lock = threading.Lock()


def flat_lattice(M: Matroid) -> FlatLattice:
    """Enumerate flats once per matroid (closure of every subset, deduplicated)."""
    with _lock:
        lat = _lattices.get(M)
    if lat is not None:
        return lat
    if M.universe_size > FLAT_CAP:
        raise UniverseTooLarge(M.universe_size, FLAT_CAP)
    flats = SetFamily.of(M.universe_size, (M.closure(X) for X in M.subsets()))
    top = M.full_rank
    hyper = SetFamily(M.universe_size, tuple(F for F in flats if M.rank(F) == top - 1))
    lat = FlatLattice(M, flats, hyper)
    with _lock:
        return _lattices.setdefault(M, lat)


def closed_sets(M: Matroid) -> SetFamily:
    return flat_lattice(M).flats


def hyperplanes(M: Matroid) -> SetFamily:
    return flat_lattice(M).hyperplanes


def closure_via_hyperplanes(M: Matroid, X: SubsetMask) -> SubsetMask:
    """U when X has full rank, else the intersection of the hyperplanes containing X."""
    lat = flat_lattice(M)
    if M.rank(X) == M.full_rank:
        return M.ground
    out = M.ground
    for H in lat.containing(X):
        out &= H
    return out


def flat_as_hyperplane_intersection(M: Matroid, X: SubsetMask) -> SetFamily:
    """The hyperplanes containing the flat X; they intersect exactly in X."""
    if not M.is_closed(X):
        raise NotAFlat(f"{format_set(X)} is not closed")
    if M.rank(X) == M.full_rank:
        raise FullRankFlat(f"{format_set(X)} has full rank; no hyperplane contains it")
    family = flat_lattice(M).containing(X)
    meet = M.ground
    for H in family:
        meet &= H
    if meet != X:
        raise RouteMismatch("flat intersection", flat=format_set(X), intersection=format_set(meet))
    return family


def closure_leq(M: Matroid, X: SubsetMask, Y: SubsetMask) -> bool:
    """cl(X) within cl(Y), decided both directly and through hyperplanes.

    Raises RouteMismatch if the two answers differ.
    """
    direct = M.closure(X) & ~M.closure(Y) == 0
    lat = flat_lattice(M)
    via = all(X & ~H == 0 for H in lat.hyperplanes if Y & ~H == 0)
    if direct != via:
        raise RouteMismatch(
            f"closure containment for {format_set(X)}, {format_set(Y)}",
            closure=direct,
            hyperplanes=via,
            family=format_family(lat.hyperplanes),
        )
    return direct
