"""Shared deterministic corpus of small uniform hypergraphs."""

from __future__ import annotations

import itertools
import random

from hyperee.hypergraph import (
    UniformHypergraph,
    from_edge_list,
    gen_empty,
    gen_hyperpath,
    gen_hyperstar,
)


def _random_instance(m: int, n: int, q: int, seed: int) -> UniformHypergraph:
    rng = random.Random(seed)
    pool = list(itertools.combinations(range(1, n + 1), m))
    return from_edge_list(m, n, rng.sample(pool, q))


# name -> hypergraph; everything has m in {2, 3, 4} and n <= 7, small
# enough that exact trace enumeration stays cheap.
CORPUS: dict[str, UniformHypergraph] = {
    "empty-2-5": gen_empty(2, 5),
    "empty-3-4": gen_empty(3, 4),
    "empty-4-4": gen_empty(4, 4),
    "star-2-3": gen_hyperstar(2, 3),
    "star-2-6": gen_hyperstar(2, 6),
    "star-3-2": gen_hyperstar(3, 2),
    "star-3-3": gen_hyperstar(3, 3),
    "star-4-1": gen_hyperstar(4, 1),
    "path-2-4": gen_hyperpath(2, 4),
    "path-3-1": gen_hyperpath(3, 1),
    "path-3-2": gen_hyperpath(3, 2),
    "path-3-3": gen_hyperpath(3, 3),
    "path-4-1": gen_hyperpath(4, 1),
    "path-4-2": gen_hyperpath(4, 2),
    "tight-pair-3": from_edge_list(3, 4, [(1, 2, 3), (1, 2, 4)]),
    "rand-2-a": _random_instance(2, 6, 5, seed=101),
    "rand-2-b": _random_instance(2, 7, 8, seed=102),
    "rand-2-c": _random_instance(2, 5, 3, seed=103),
    "rand-3-a": _random_instance(3, 6, 3, seed=201),
    "rand-3-b": _random_instance(3, 6, 4, seed=202),
    "rand-3-c": _random_instance(3, 7, 3, seed=203),
    "rand-4-a": _random_instance(4, 5, 2, seed=301),
    "rand-4-b": _random_instance(4, 6, 3, seed=302),
    "rand-4-c": _random_instance(4, 7, 2, seed=303),
}

CORPUS_IDS = sorted(CORPUS)
CORPUS_ITEMS = [CORPUS[name] for name in CORPUS_IDS]
