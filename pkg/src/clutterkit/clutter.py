"""Clutters (Sperner families): construction, validation and the (C1)/(C2) checks.

Vertices are dense integer ids ``0..n-1`` mapped to string labels at the
boundary; edges are int bitmasks over those ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitset import full_mask, is_subset, iter_bits, lex_key, mask_of, members
from .errors import (
    AntichainViolation,
    DuplicateLabel,
    EmptyEdge,
    NoEdges,
    NotAPermutation,
    ParseError,
    UnknownLabel,
)


@dataclass(frozen=True)
class Clutter:
    labels: tuple[str, ...]
    edges: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_labels(self, i: int) -> list[str]:
        return [self.labels[v] for v in iter_bits(self.edges[i])]

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)


def _find_violation(edges: Sequence[int]):
    for i, a in enumerate(edges):
        for j in range(i + 1, len(edges)):
            b = edges[j]
            if is_subset(a, b) or is_subset(b, a):
                return i, j
    return None


def validate(c: Clutter) -> None:
    """Raise if ``c`` breaks any Clutter invariant."""
    if len(set(c.labels)) != len(c.labels):
        raise DuplicateLabel("labels are not pairwise distinct")
    universe = full_mask(c.n)
    for e in c.edges:
        if e == 0:
            raise EmptyEdge("empty edge")
        if e & ~universe:
            raise UnknownLabel("edge member outside the vertex universe")
    bad = _find_violation(c.edges)
    if bad is not None:
        raise AntichainViolation(*bad)


def from_masks(labels: Iterable, edges: Iterable[int]) -> Clutter:
    c = Clutter(tuple(str(x) for x in labels), tuple(edges))
    validate(c)
    return c


def build_clutter(labels: Iterable, edge_lists: Iterable[Iterable]) -> Clutter:
    """Build a validated clutter from external labels.

    Labels are converted with ``str`` so integer labels work too. Edge order
    is preserved. Non-antichain input raises :class:`AntichainViolation`
    naming the first offending pair; use :func:`normalize_antichain` to repair.
    """
    labels = tuple(str(x) for x in labels)
    index: dict[str, int] = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise DuplicateLabel(f"duplicate label {lab!r}")
        index[lab] = i
    edges = []
    for members_ in edge_lists:
        m = 0
        for lab in members_:
            lab = str(lab)
            if lab not in index:
                raise UnknownLabel(f"unknown label {lab!r}")
            m |= 1 << index[lab]
        if m == 0:
            raise EmptyEdge(f"edge {len(edges)} is empty")
        edges.append(m)
    bad = _find_violation(edges)
    if bad is not None:
        raise AntichainViolation(*bad)
    return Clutter(labels, tuple(edges))


def normalize_antichain(sets: Sequence[int]) -> list[int]:
    """Keep the inclusion-maximal sets, collapsing duplicates, in input order."""
    out = []
    seen = set()
    for s in sets:
        if s in seen:
            continue
        if any(s != t and is_subset(s, t) for t in sets):
            continue
        seen.add(s)
        out.append(s)
    return out


def check_c1(c: Clutter) -> bool:
    """True iff no vertex lies in every edge."""
    if c.m == 0:
        raise NoEdges("(C1) is undefined on a clutter with no edges")
    common = c.edges[0]
    for e in c.edges[1:]:
        common &= e
    return common == 0


def check_c2(c: Clutter) -> bool:
    """True iff every vertex lies in some edge."""
    union = 0
    for e in c.edges:
        union |= e
    return union == full_mask(c.n)


def remove_isolated(c: Clutter) -> Clutter:
    union = 0
    for e in c.edges:
        union |= e
    keep = members(union)
    if len(keep) == c.n:
        return c
    new_id = {old: new for new, old in enumerate(keep)}
    edges = tuple(mask_of(new_id[v] for v in iter_bits(e)) for e in c.edges)
    return Clutter(tuple(c.labels[v] for v in keep), edges)


def relabel(c: Clutter, perm: Sequence[int]) -> Clutter:
    """Move vertex ``v`` to id ``perm[v]``, carrying its label along."""
    n = c.n
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotAPermutation(f"{list(perm)!r} is not a permutation of range({n})")
    labels = [""] * n
    for v, w in enumerate(perm):
        labels[w] = c.labels[v]
    edges = tuple(mask_of(perm[v] for v in iter_bits(e)) for e in c.edges)
    return Clutter(tuple(labels), edges)


def is_antichain(sets: Sequence[int]) -> bool:
    return _find_violation(list(sets)) is None


# -- JSON ------------------------------------------------------------------


def clutter_to_dict(c: Clutter) -> dict:
    edges = sorted(c.edges, key=lex_key)
    return {
        "vertices": list(c.labels),
        "edges": [[c.labels[v] for v in iter_bits(e)] for e in edges],
    }


def clutter_to_json(c: Clutter) -> str:
    return json.dumps(clutter_to_dict(c))


def clutter_from_dict(data) -> Clutter:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ParseError('clutter JSON needs "vertices" and "edges" keys')
    vertices, edges = data["vertices"], data["edges"]
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise ParseError('"vertices" and "edges" must be lists')
    if not all(isinstance(e, list) for e in edges):
        raise ParseError("each edge must be a list of labels")
    return build_clutter(vertices, edges)


def clutter_from_json(text: str) -> Clutter:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return clutter_from_dict(data)
