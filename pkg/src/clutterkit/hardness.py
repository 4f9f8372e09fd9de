"""Smallest recognizing subsets and the hardness of clutters.

A subset ``s`` of edge ``e`` is recognizing iff no other edge contains it,
i.e. iff ``s`` meets ``e - e'`` for every other edge ``e'``. So a smallest
recognizing subset is a minimum hitting set of the difference family, which
is what :func:`min_recognizing_subset` solves by branch-and-bound.
:func:`brute_force_min_recognizing` checks the definition directly instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .bitset import is_subset, iter_bits, mask_of, members
from .clutter import Clutter
from .errors import EdgeTooLarge, EmptyTarget, IndexOutOfRange
from .jsonio import rational_to_dict

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class RecognizingWitness:
    edge_index: int
    subset: int

    @property
    def size(self) -> int:
        return self.subset.bit_count()


@dataclass(frozen=True)
class HardnessReport:
    per_edge: tuple[tuple[Fraction, RecognizingWitness], ...]
    overall: Fraction
    argmax_edge: Optional[int]


def _check_index(c: Clutter, i: int) -> None:
    if not 0 <= i < c.m:
        raise IndexOutOfRange(f"edge index {i} out of range for m={c.m}")


def reduce_targets(targets: Sequence[int]) -> list[int]:
    """Drop duplicates and any target that strictly contains another; order is kept."""
    uniq = list(dict.fromkeys(targets))
    kept: list[int] = []
    # a superset is always seen after its subsets, and containing any target
    # implies containing a minimal one, so only kept targets need checking
    for t in sorted(uniq, key=int.bit_count):
        for k in kept:
            if k & ~t == 0:
                break
        else:
            kept.append(t)
    if len(kept) == len(uniq):
        return uniq
    minimal = set(kept)
    return [t for t in uniq if t in minimal]


def difference_targets(c: Clutter, i: int) -> list[int]:
    _check_index(c, i)
    e = c.edges[i]
    return reduce_targets([e & ~f for j, f in enumerate(c.edges) if j != i])


def is_recognizing(c: Clutter, i: int, subset: int) -> bool:
    """Direct check of the definition: ``subset`` lies in edge ``i`` and no other."""
    if not is_subset(subset, c.edges[i]):
        return False
    return all(j == i or not is_subset(subset, f) for j, f in enumerate(c.edges))


# -- exact minimum hitting set ---------------------------------------------


def _greedy_cover(targets: list[int]) -> int:
    chosen = 0
    remaining = targets
    while remaining:
        counts: dict[int, int] = {}
        for t in remaining:
            for v in iter_bits(t):
                counts[v] = counts.get(v, 0) + 1
        v = max(counts, key=lambda x: (counts[x], -x))
        chosen |= 1 << v
        remaining = [t for t in remaining if not (t >> v) & 1]
    return chosen


def _incidence(targets: list[int], universe: int) -> list[int]:
    """``cover[v]`` is the bitmask of target indices containing vertex ``v``."""
    cover = [0] * universe.bit_length()
    for j, t in enumerate(targets):
        bit = 1 << j
        for v in iter_bits(t):
            cover[v] |= bit
    return cover


PIVOT_WINDOW = 16


def _search(targets: list[int], cover: list[int], uncovered: int, allowed: int, limit: int) -> Optional[int]:
    """Smallest set of ``allowed`` vertices hitting every target in ``uncovered``.

    Targets are indexed by the bits of ``uncovered`` and must be sorted by
    size. Returns None when no such set has at most ``limit`` members.
    """
    best: Optional[int] = None
    best_size = limit + 1

    def rec(unc: int, allowed: int, chosen: int, depth: int) -> None:
        nonlocal best, best_size
        if unc == 0:
            best, best_size = chosen, depth
            return
        if depth + 1 >= best_size:
            return
        gains = []
        reach = 0
        for v in iter_bits(allowed):
            hit = cover[v] & unc
            if hit:
                reach |= hit
                gains.append((hit.bit_count(), v))
        if reach != unc:
            return
        gains.sort(reverse=True)
        need = unc.bit_count()
        degree = 0
        for g, _ in gains:
            need -= g
            degree += 1
            if need <= 0:
                break
        if depth + degree >= best_size:
            return
        # pivot and disjoint packing over the smallest few uncovered targets;
        # any disjoint subfamily is a valid lower bound
        pivot = 0
        pivot_count = 1 << 30
        used = 0
        packing = 0
        rest = unc
        for _ in range(PIVOT_WINDOW):
            if not rest:
                break
            low = rest & -rest
            rest ^= low
            t = targets[low.bit_length() - 1] & allowed
            cnt = t.bit_count()
            if cnt < pivot_count:
                pivot, pivot_count = t, cnt
            if t & used == 0:
                used |= t
                packing += 1
        if depth + packing >= best_size:
            return
        gain = {v: g for g, v in gains}
        for v in sorted(iter_bits(pivot), key=lambda x: (-gain[x], x)):
            bit = 1 << v
            allowed &= ~bit
            rec(unc & ~cover[v], allowed, chosen | bit, depth + 1)
            # later siblings never use v
            if depth + 1 >= best_size:
                return

    rec(uncovered, allowed, 0, 0)
    return best


def min_hitting_set(targets: Sequence[int]) -> int:
    """Minimum-cardinality set meeting every target; lexicographically least among ties.

    Branch-and-bound (greedy upper bound; disjoint-packing and degree-sum
    lower bounds; branching on the target with fewest candidates) finds the
    optimum size ``k``. The lexicographically least optimum is then fixed one
    element at a time: the next element is the smallest id whose residual
    problem, restricted to larger ids, still has a cover within budget.
    """
    for t in targets:
        if t == 0:
            raise EmptyTarget("cannot hit an empty target")
    ts = sorted(reduce_targets(list(targets)), key=int.bit_count)
    if not ts:
        return 0
    universe = 0
    for t in ts:
        universe |= t
    cover = _incidence(ts, universe)
    everything = (1 << len(ts)) - 1
    greedy = _greedy_cover(ts)
    improved = _search(ts, cover, everything, universe, greedy.bit_count() - 1)
    known = greedy if improved is None else improved

    # ``known`` is always an optimum extending ``chosen``; only ids below its
    # next element can start a lexicographically smaller completion
    chosen = 0
    floor = universe
    for budget in range(known.bit_count(), 0, -1):
        rest_known = known & floor
        nxt = (rest_known & -rest_known).bit_length() - 1
        for v in iter_bits(floor & ((1 << nxt) - 1)):
            above = floor & ~((1 << (v + 1)) - 1)
            unc = everything
            for u in iter_bits(chosen | (1 << v)):
                unc &= ~cover[u]
            completion = _search(ts, cover, unc, above, budget - 1)
            if completion is not None:
                known = chosen | (1 << v) | completion
                break
        else:
            v = nxt
        chosen |= 1 << v
        floor &= ~((1 << (v + 1)) - 1)
    return chosen


# -- recognizing subsets and hardness ---------------------------------------


def min_recognizing_subset(c: Clutter, i: int) -> RecognizingWitness:
    return RecognizingWitness(i, min_hitting_set(difference_targets(c, i)))


def brute_force_min_recognizing(c: Clutter, i: int) -> RecognizingWitness:
    """Enumerate subsets of edge ``i`` by (size, lexicographic) order; first recognizing wins."""
    _check_index(c, i)
    edge = members(c.edges[i])
    if len(edge) > BRUTE_FORCE_LIMIT:
        raise EdgeTooLarge(f"edge {i} has {len(edge)} > {BRUTE_FORCE_LIMIT} members")
    others = [f for j, f in enumerate(c.edges) if j != i]
    for r in range(len(edge) + 1):
        for combo in combinations(edge, r):
            s = mask_of(combo)
            if not any(is_subset(s, f) for f in others):
                return RecognizingWitness(i, s)
    raise AssertionError("edge itself must be recognizing in an antichain")


def edge_hardness(c: Clutter, i: int) -> Fraction:
    w = min_recognizing_subset(c, i)
    return Fraction(w.size, c.edges[i].bit_count())


def clutter_hardness(c: Clutter, oracle: bool = False) -> HardnessReport:
    """Per-edge hardness, overall maximum and the first edge attaining it.

    With ``oracle=True`` witnesses come from the brute-force enumerator.
    """
    solve = brute_force_min_recognizing if oracle else min_recognizing_subset
    per_edge = []
    for i, e in enumerate(c.edges):
        w = solve(c, i)
        per_edge.append((Fraction(w.size, e.bit_count()), w))
    if not per_edge:
        return HardnessReport((), Fraction(0), None)
    overall = max(v for v, _ in per_edge)
    argmax = next(i for i, (v, _) in enumerate(per_edge) if v == overall)
    return HardnessReport(tuple(per_edge), overall, argmax)


def report_to_dict(c: Clutter, report: HardnessReport, witness: bool = True, only=None) -> dict:
    edges = []
    for value, w in report.per_edge:
        if only is not None and w.edge_index != only:
            continue
        entry = {"index": w.edge_index, "c": rational_to_dict(value)}
        if witness:
            entry["witness"] = [c.labels[v] for v in iter_bits(w.subset)]
        edges.append(entry)
    return {
        "overall": rational_to_dict(report.overall),
        "argmax_edge": report.argmax_edge,
        "edges": edges,
    }
