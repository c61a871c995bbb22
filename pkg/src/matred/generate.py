"""Random small matroids for exhaustive checking."""

from __future__ import annotations

import random

from .matroid import (
    Gf2Matroid,
    GraphicMatroid,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
    as_explicit,
)

KINDS = ("uniform", "gf2", "graphic", "partition", "explicit")


def random_uniform(rng: random.Random, n: int) -> UniformMatroid:
    return UniformMatroid(n, rng.randint(0, n))


def random_gf2(rng: random.Random, n: int, max_rows: int = 5) -> Gf2Matroid:
    rows = [rng.getrandbits(n) if n else 0 for _ in range(rng.randint(0, max_rows))]
    return Gf2Matroid(n, rows)


def random_graphic(rng: random.Random, n: int, max_vertices: int = 6) -> GraphicMatroid:
    """n edges on at most ``max_vertices`` vertices; parallel edges and self-loops allowed."""
    v = rng.randint(1, max_vertices)
    edges = [(rng.randrange(v), rng.randrange(v)) for _ in range(n)]
    return GraphicMatroid(v, edges)


def random_partition(rng: random.Random, n: int) -> PartitionMatroid:
    if n == 0:
        return PartitionMatroid(0, [], [])
    nblocks = rng.randint(1, n)
    labels = [rng.randrange(nblocks) for _ in range(n)]
    blocks = {}
    for e, b in enumerate(labels):
        blocks[b] = blocks.get(b, 0) | (1 << e)
    masks = [blocks[b] for b in sorted(blocks)]
    caps = [rng.randint(0, m.bit_count()) for m in masks]
    return PartitionMatroid(n, masks, caps)


def random_matroid(rng: random.Random, n: int, kind: str | None = None) -> Matroid:
    kind = kind or rng.choice(KINDS)
    if kind == "uniform":
        return random_uniform(rng, n)
    if kind == "gf2":
        return random_gf2(rng, n)
    if kind == "graphic":
        return random_graphic(rng, n)
    if kind == "partition":
        return random_partition(rng, n)
    if kind == "explicit":
        return as_explicit(random_matroid(rng, n, rng.choice(KINDS[:-1])))
    raise ValueError(f"unknown matroid kind {kind!r}")


def matroid_zoo(seed: int, count: int, max_n: int, kinds=KINDS[:-1], min_n: int = 1) -> list[Matroid]:
    """``count`` matroids cycling through ``kinds`` with sizes in [min_n, max_n]."""
    rng = random.Random(seed)
    return [random_matroid(rng, rng.randint(min_n, max_n), kinds[i % len(kinds)]) for i in range(count)]
