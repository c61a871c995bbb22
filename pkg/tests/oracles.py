"""Brute-force reference computations, deliberately independent of the
code paths they check (no bitmask tricks from the package beyond plain
set conversion)."""

from itertools import chain, combinations, product


def powerset(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


def to_set(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def to_mask(s):
    return sum(1 << i for i in s)


def pairwise_min(family):
    fam = [frozenset(f) for f in family]
    return {f for f in fam if not any(g < f for g in fam)}


def pairwise_max(family):
    fam = [frozenset(f) for f in family]
    return {f for f in fam if not any(f < g for g in fam)}


def rank_from_family(indep, X):
    return max(len(I) for I in indep if I <= X)


def closure_from_family(indep, n, X):
    r = rank_from_family(indep, X)
    return frozenset(x for x in range(n) if rank_from_family(indep, X | {x}) == r)


def gf2_columns_independent(columns):
    """No nonempty subset of the columns XORs to zero."""
    for r in range(1, len(columns) + 1):
        for combo in combinations(columns, r):
            acc = 0
            for c in combo:
                acc ^= c
            if acc == 0:
                return False
    return True


def edges_acyclic(edges):
    """A nonempty even-degree edge subset exists iff the edge set has a cycle."""
    for r in range(1, len(edges) + 1):
        for combo in combinations(edges, r):
            deg = {}
            for u, v in combo:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if all(d % 2 == 0 for d in deg.values()):
                return False
    return True


def union_compatible_4way(n, kernel):
    """The literal four-set congruence condition over all of 2^U."""
    subsets = [to_mask(s) for s in powerset(range(n))]
    keys = {s: kernel(s) for s in subsets}
    for a1, a2, b1, b2 in product(subsets, repeat=4):
        if keys[a1] == keys[a2] and keys[b1] == keys[b2] and keys[a1 | b1] != keys[a2 | b2]:
            return (a1, a2, b1, b2)
    return None


def minimal_hitting_sets(universe, targets):
    hits = [B for B in powerset(universe) if all(B & T for T in targets)]
    return pairwise_min(hits)
