"""Generators: the two-edge family, the square-n extremal family, standard graphs, and seeded random instances."""

from __future__ import annotations

from typing import Optional

from .bitset import full_mask, mask_of
from .clutter import Clutter, check_c1, check_c2, from_masks, normalize_antichain, remove_isolated
from .errors import RetriesExhausted, SizeTooSmall
from .graphs import Graph
from .rng import SplitMix64


def example1(n: int) -> Clutter:
    """Vertices 1..n with edges {1,3,...,n} and {2,3,...,n}; hardness 1/(n-1)."""
    if n < 3:
        raise SizeTooSmall(f"example1 needs n >= 3, got {n}")
    shared = full_mask(n) & ~0b11
    return from_masks(range(1, n + 1), (shared | 0b01, shared | 0b10))


def _extremal_labels(k: int) -> list[str]:
    return [f"q{i}" for i in range(k)] + [f"p{j}" for j in range(k * (k - 1))]


def pendant_group(k: int, i: int) -> int:
    """Ids of the k-1 pendant vertices hanging off clique vertex ``i``."""
    start = k + i * (k - 1)
    return mask_of(range(start, start + k - 1))


def pendant_set(k: int) -> int:
    """The independent set formed by all pendant vertices (removed from the clutter)."""
    return full_mask(k * k) & ~full_mask(k)


def extremal_graph(k: int) -> Graph:
    """k-clique on ids 0..k-1; clique vertex i is joined to the k-1 pendants of its group."""
    if k < 2:
        raise SizeTooSmall(f"extremal construction needs k >= 2, got {k}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        start = k + i * (k - 1)
        edges.extend((i, p) for p in range(start, start + k - 1))
    return Graph.from_edges(k * k, edges, _extremal_labels(k))


def extremal_clutter(k: int) -> Clutter:
    """Maximal independent sets of :func:`extremal_graph` other than the pendant set.

    Edge i is {q_i} plus every pendant outside group i, of size 1 + (k-1)**2.
    """
    if k < 2:
        raise SizeTooSmall(f"extremal construction needs k >= 2, got {k}")
    pendants = pendant_set(k)
    edges = [(1 << i) | (pendants & ~pendant_group(k, i)) for i in range(k)]
    return from_masks(_extremal_labels(k), edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise SizeTooSmall(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise SizeTooSmall(f"complete bipartite graph needs parts >= 1, got {a}, {b}")
    labels = [f"a{i}" for i in range(a)] + [f"b{j}" for j in range(b)]
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)], labels)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise SizeTooSmall(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_clutter(n: int, m_target: int, size_range: Optional[tuple[int, int]] = None, seed: int = 0) -> Clutter:
    """Draw ``m_target`` random subsets and keep the inclusion-maximal ones.

    Each draw picks a size uniformly from ``size_range`` (default ``[1, n-1]``,
    or ``[1, 1]`` when n = 1) and then a uniform subset of that size. Vertex
    labels are ``"0".."n-1"``; the result may have fewer than ``m_target`` edges.
    """
    if n < 1:
        raise SizeTooSmall(f"random clutter needs n >= 1, got {n}")
    lo, hi = size_range if size_range is not None else (1, max(1, n - 1))
    if not 0 <= lo <= hi <= n:
        raise ValueError(f"size range {lo}..{hi} outside 0..{n}")
    rng = SplitMix64(seed)
    sets = [mask_of(rng.sample(n, rng.randint(lo, hi))) for _ in range(m_target)]
    edges = [s for s in normalize_antichain(sets) if s]
    return from_masks(range(n), edges)


def random_clutter_c1c2(
    n: int,
    m_target: int,
    size_range: Optional[tuple[int, int]] = None,
    seed: int = 0,
    max_retries: int = 1000,
) -> Clutter:
    """Random clutter with isolated vertices dropped that satisfies (C1), (C2) and m >= 2.

    Attempt ``t`` uses the ``t``-th output of ``SplitMix64(seed)`` as its seed.
    """
    seeds = SplitMix64(seed)
    for _ in range(max_retries):
        c = remove_isolated(random_clutter(n, m_target, size_range, seeds.next_u64()))
        if c.m >= 2 and check_c1(c) and check_c2(c):
            return c
    raise RetriesExhausted(f"no (C1)/(C2) clutter after {max_retries} attempts")


def random_graph(n: int, p_num: int, p_den: int, seed: int = 0) -> Graph:
    """G(n, p) with p = p_num/p_den; pairs (u, v), u < v, drawn in lexicographic order."""
    if p_den < 1 or not 0 <= p_num <= p_den:
        raise ValueError(f"invalid probability {p_num}/{p_den}")
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.below(p_den) < p_num]
    return Graph.from_edges(n, edges)
