"""Simple graphs and the clutters they induce: maximal independent sets and maximal matchings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .bitset import full_mask, iter_bits, lex_key, members
from .clutter import Clutter, from_masks
from .errors import NoGraphEdges, OutputCapExceeded, ParseError

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbourhood bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        if len(self.adj) != self.n or len(self.labels) != self.n:
            raise ValueError("adjacency and labels must have one entry per vertex")
        for v, row in enumerate(self.adj):
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            if row & ~full_mask(self.n):
                raise ValueError(f"vertex {v} has a neighbour outside the graph")
            for u in iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] = ()) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(str(x) for x in labels))

    def edges(self) -> list[tuple[int, int]]:
        """Unordered adjacent pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def complement(g: Graph) -> Graph:
    full = full_mask(g.n)
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)), g.labels)


def is_independent(g: Graph, s: int) -> bool:
    return all(g.adj[v] & s == 0 for v in iter_bits(s))


def is_maximal_independent(g: Graph, s: int) -> bool:
    if not is_independent(g, s):
        return False
    dominated = s
    for v in iter_bits(s):
        dominated |= g.adj[v]
    return dominated == full_mask(g.n)


def _maximal_independent_sets(g: Graph, cap: int) -> list[int]:
    # Bron-Kerbosch with Tomita pivoting, run on non-neighbourhoods.
    full = full_mask(g.n)
    non_adj = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0:
            if x == 0:
                if len(found) >= cap:
                    raise OutputCapExceeded(f"more than {cap} maximal sets")
                found.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: (p & non_adj[u]).bit_count())
        for v in iter_bits(p & ~non_adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & non_adj[v], x & non_adj[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    found.sort(key=lex_key)
    return found


def enumerate_maximal_independent_sets(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    """All maximal independent sets, lexicographically ordered by sorted id-sequence."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    return _maximal_independent_sets(g, cap)


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph plus the mapping from its vertex ids to the original edges."""
    pairs = g.edges()
    at: dict[int, int] = {}
    for i, (u, v) in enumerate(pairs):
        at[u] = at.get(u, 0) | (1 << i)
        at[v] = at.get(v, 0) | (1 << i)
    adj = tuple((at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(pairs))
    labels = tuple(edge_label(g, p) for p in pairs)
    return Graph(len(pairs), adj, labels), pairs


def edge_label(g: Graph, pair: tuple[int, int]) -> str:
    return f"{g.labels[pair[0]]}-{g.labels[pair[1]]}"


def enumerate_maximal_matchings(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    """Maximal matchings as bitmasks over edge ids (indices into ``g.edges()``).

    The edgeless graph has exactly one maximal matching, the empty one.
    """
    lg, _ = line_graph(g)
    return _maximal_independent_sets(lg, cap)


def mis_clutter(g: Graph, cap: int = DEFAULT_CAP) -> Clutter:
    return from_masks(g.labels, enumerate_maximal_independent_sets(g, cap))


def matching_clutter(g: Graph, cap: int = DEFAULT_CAP) -> Clutter:
    if g.edge_count == 0:
        raise NoGraphEdges("maximal matchings of an edgeless graph give no clutter")
    lg, _ = line_graph(g)
    return from_masks(lg.labels, _maximal_independent_sets(lg, cap))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full_mask(g.n)


def _is_balanced_complete_bipartite(g: Graph, half: int) -> bool:
    if g.n != 2 * half:
        return False
    side_b = g.adj[0]
    side_a = full_mask(g.n) & ~side_b
    if side_a.bit_count() != half or side_b.bit_count() != half:
        return False
    return all(g.adj[v] == (side_b if (side_a >> v) & 1 else side_a) for v in range(g.n))


def is_excluded_exception(g: Graph) -> bool:
    """True for K_1, K_{2,2}, K_{3,3} and K_{4,4}."""
    if g.n == 1:
        return True
    return any(_is_balanced_complete_bipartite(g, h) for h in (2, 3, 4))


# -- file formats ----------------------------------------------------------


def graph_to_dict(g: Graph) -> dict:
    return {
        "vertices": list(g.labels),
        "adjacency": [[g.labels[u], g.labels[v]] for u, v in g.edges()],
    }


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g))


def graph_from_dict(data) -> Graph:
    if not isinstance(data, dict) or "vertices" not in data or "adjacency" not in data:
        raise ParseError('graph JSON needs "vertices" and "adjacency" keys')
    labels = [str(x) for x in data["vertices"]]
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise ParseError("duplicate vertex label")
    edges = []
    for pair in data["adjacency"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"bad adjacency entry {pair!r}")
        try:
            edges.append((index[str(pair[0])], index[str(pair[1])]))
        except KeyError as exc:
            raise ParseError(f"unknown vertex {exc.args[0]!r}") from None
    return _graph_or_parse_error(len(labels), edges, labels)


def _graph_or_parse_error(n, edges, labels) -> Graph:
    try:
        return Graph.from_edges(n, edges, labels)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_graph_text(text: str) -> Graph:
    """Parse ``p <n> <m>`` / ``e <u> <v>`` lines; ``c`` lines are comments.

    Endpoints are 0-based ids when every endpoint is an integer below ``n``;
    otherwise they are labels, numbered in order of first appearance. A
    DIMACS-style ``p edge <n> <m>`` header is accepted as well.
    """
    n: Optional[int] = None
    declared_m = None
    raw: list[tuple[str, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            nums = [t for t in tok[1:] if not t.isalpha()]
            if len(nums) != 2 or not all(t.isdigit() for t in nums):
                raise ParseError(f"line {lineno}: expected 'p <n> <m>'")
            n, declared_m = int(nums[0]), int(nums[1])
        elif tok[0] == "e":
            if len(tok) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            raw.append((tok[1], tok[2]))
        else:
            raise ParseError(f"line {lineno}: unknown record {tok[0]!r}")
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if declared_m != len(raw):
        raise ParseError(f"header declares {declared_m} edges, found {len(raw)}")

    numeric = all(t.isdigit() and int(t) < n for pair in raw for t in pair)
    if numeric:
        return _graph_or_parse_error(n, [(int(a), int(b)) for a, b in raw], ())
    labels: list[str] = []
    index: dict[str, int] = {}
    for pair in raw:
        for t in pair:
            if t not in index:
                index[t] = len(labels)
                labels.append(t)
    if len(labels) > n:
        raise ParseError(f"{len(labels)} distinct labels but header says n={n}")
    # isolated vertices have no name in the labelled form
    extra = 0
    while len(labels) < n:
        name = f"_{extra}"
        extra += 1
        if name not in index:
            index[name] = len(labels)
            labels.append(name)
    return _graph_or_parse_error(n, [(index[a], index[b]) for a, b in raw], labels)


def load_graph(text: str) -> Graph:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from exc
        return graph_from_dict(data)
    return parse_graph_text(text)


def mask_labels(g: Graph, s: int) -> list[str]:
    return [g.labels[v] for v in members(s)]
