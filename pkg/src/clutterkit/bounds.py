"""Exact bound comparisons, lower-bound verification and a step-by-step proof trace.

The bounds involve square roots, so every comparison is reduced to the sign
of ``a + b*sqrt(x)`` with integer ``a, b, x`` and settled by one squaring
after the sign cases are split off. No floating point is used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .bitset import iter_bits
from .clutter import Clutter, check_c1, check_c2
from .errors import NTooSmall, PreconditionFailed, TheoremViolated, TraceAssertionFailed
from .graphs import Graph
from .hardness import HardnessReport, clutter_hardness
from .jsonio import int_from_json, int_to_json, rational_from_dict, rational_to_dict


class Relation(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    @classmethod
    def of_sign(cls, s: int) -> "Relation":
        return cls.LESS if s < 0 else cls.GREATER if s > 0 else cls.EQUAL


BOUND_KINDS = ("main", "general", "mis")


@dataclass(frozen=True)
class BoundComparison:
    relation: Relation
    lhs: Fraction
    n: int
    kind: str

    @property
    def holds(self) -> bool:
        return self.relation is not Relation.LESS


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_a_plus_b_sqrt(a: int, b: int, x: int) -> int:
    """Exact sign of ``a + b*sqrt(x)`` for integers, ``x >= 0``."""
    if x < 0:
        raise ValueError("negative radicand")
    sa = _sign(a)
    sb = _sign(b) if x else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the larger magnitude wins
    return sa * _sign(a * a - b * b * x)


def _as_fraction(c) -> Fraction:
    c = Fraction(c)
    if c < 0:
        raise ValueError("hardness values are non-negative")
    return c


def general_lower_bound(n: int) -> Fraction:
    if n < 2:
        raise NTooSmall(f"bound needs n >= 2, got {n}")
    return Fraction(1, n - 1)


def compare_main_bound(c, n: int) -> BoundComparison:
    """Compare ``c = p/q`` with ``1 / (n - 2*sqrt(n) + 2)``.

    Since the divisor is positive, ``p/q >= bound`` iff
    ``A = p*(n+2) - q >= 2*p*sqrt(n)``. A negative ``A`` means Less;
    otherwise ``A**2`` is compared with ``4*p**2*n``.
    """
    if n < 2:
        raise NTooSmall(f"bound needs n >= 2, got {n}")
    c = _as_fraction(c)
    p, q = c.numerator, c.denominator
    a = p * (n + 2) - q
    if a < 0:
        rel = Relation.LESS
    else:
        rel = Relation.of_sign(a * a - 4 * p * p * n)
    return BoundComparison(rel, c, n, "main")


def compare_mis_bound(c, n: int) -> BoundComparison:
    """Compare ``c = p/q`` with ``1 / (1 + n - 2*sqrt(n - 1))`` the same way."""
    if n < 2:
        raise NTooSmall(f"bound needs n >= 2, got {n}")
    c = _as_fraction(c)
    p, q = c.numerator, c.denominator
    a = p * (1 + n) - q
    if a < 0:
        rel = Relation.LESS
    else:
        rel = Relation.of_sign(a * a - 4 * p * p * (n - 1))
    return BoundComparison(rel, c, n, "mis")


def compare_general_bound(c, n: int) -> BoundComparison:
    c = _as_fraction(c)
    bound = general_lower_bound(n)
    return BoundComparison(Relation.of_sign((c > bound) - (c < bound)), c, n, "general")


COMPARATORS = {
    "main": compare_main_bound,
    "general": compare_general_bound,
    "mis": compare_mis_bound,
}


def sandwich_check(n: int) -> bool:
    """Exactly check 1/(n-1) <= 1/(n-2*sqrt(n)+2) <= 1/(1+n-2*sqrt(n-1))."""
    if n < 3:
        raise NTooSmall(f"sandwich needs n >= 3, got {n}")
    lower_ok = compare_main_bound(Fraction(1, n - 1), n).relation is not Relation.GREATER
    # second link: n-2*sqrt(n)+2 >= 1+n-2*sqrt(n-1)  <=>  1 + 2*sqrt(n-1) >= 2*sqrt(n)
    # both sides non-negative, so square:  4*sqrt(n-1) - 3 >= 0
    upper_ok = sign_a_plus_b_sqrt(-3, 4, n - 1) >= 0
    return lower_ok and upper_ok


# -- lower-bound verification -------------------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    n: int
    m: int
    c1: bool
    c2: bool
    hardness: Fraction
    comparison: Optional[BoundComparison]
    applicable: bool


def verify_theorem(c: Clutter, bound: str = "main", report: Optional[HardnessReport] = None) -> TheoremReport:
    """Compute hardness and compare it with a lower bound.

    ``main`` applies when (C1), (C2) hold and m >= 2; ``general`` whenever
    m >= 2. ``mis`` is only known to hold for clutters of maximal independent
    sets of connected graphs, which a bare clutter cannot certify, so it is
    reported but never applicable. An applicable bound that fails raises
    :class:`TheoremViolated`.
    """
    if bound not in COMPARATORS:
        raise ValueError(f"unknown bound {bound!r}")
    c1 = check_c1(c) if c.m else False
    c2 = check_c2(c)
    if report is None:
        report = clutter_hardness(c)
    comparison = COMPARATORS[bound](report.overall, c.n) if c.n >= 2 else None
    if bound == "main":
        applicable = c1 and c2 and c.m >= 2
    elif bound == "general":
        applicable = c.m >= 2
    else:
        applicable = False
    result = TheoremReport(c.n, c.m, c1, c2, report.overall, comparison, applicable)
    if applicable and not comparison.holds:
        raise TheoremViolated(c, result)
    return result


# -- proof trace ------------------------------------------------------------

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: Number
    op: str
    rhs: Number

    @property
    def holds(self) -> bool:
        if self.op == ">=":
            return self.lhs >= self.rhs
        if self.op == "<=":
            return self.lhs <= self.rhs
        if self.op == ">":
            return self.lhs > self.rhs
        if self.op == "==":
            return self.lhs == self.rhs
        raise ValueError(f"unknown operator {self.op!r}")


@dataclass(frozen=True)
class ProofTrace:
    branch: str  # "TwoPlus" or "AllSingletons"
    n: int
    m: int
    hardness: Fraction
    recognizer_vertices: tuple[int, ...]
    aux_graph: Optional[Graph]
    clique_ok: Optional[bool]
    coverage_ok: Optional[bool]
    z: Optional[int]
    degree_z: Optional[int]
    e_z: Optional[int]
    two_plus_edge: Optional[int]
    chain: tuple[Inequality, ...]
    final_value: Fraction
    final_relation: Relation

    def failures(self) -> list[str]:
        failed = [ineq.name for ineq in self.chain if not ineq.holds]
        if self.clique_ok is False:
            failed.insert(0, "clique")
        if self.coverage_ok is False:
            failed.insert(0, "coverage")
        if self.final_relation is Relation.LESS:
            failed.append("final bound")
        return failed


def auxiliary_graph(c: Clutter) -> Graph:
    """Graph on the clutter's vertices; u ~ v iff no edge contains both."""
    together = [0] * c.n
    for e in c.edges:
        for v in iter_bits(e):
            together[v] |= e
    full = (1 << c.n) - 1
    return Graph(c.n, tuple(full & ~together[v] & ~(1 << v) for v in range(c.n)), c.labels)


def proof_trace(c: Clutter, report: Optional[HardnessReport] = None) -> ProofTrace:
    """Replay the lower-bound argument on ``c``, checking every step exactly.

    Raises :class:`PreconditionFailed` unless (C1), (C2) and m >= 2 hold, and
    :class:`TraceAssertionFailed` (carrying the trace) if any step fails.
    """
    if c.m < 2 or not check_c1(c) or not check_c2(c):
        raise PreconditionFailed("proof trace needs (C1), (C2) and at least two edges")
    n, m = c.n, c.m
    if report is None:
        report = clutter_hardness(c)
    hardness = report.overall
    witnesses = [w for _, w in report.per_edge]

    big = next((w for w in witnesses if w.size >= 2), None)
    if big is not None:
        e = c.edges[big.edge_index]
        final = Fraction(2, n - 1)
        chain = (
            Inequality("|s_e| >= 2", big.size, ">=", 2),
            Inequality("|e| <= n - 1", e.bit_count(), "<=", n - 1),
            Inequality("c(L) >= 2/(n-1)", hardness, ">=", final),
        )
        trace = ProofTrace(
            "TwoPlus", n, m, hardness, (), None, None, None, None, None, None,
            big.edge_index, chain, final, compare_main_bound(final, n).relation,
        )
    else:
        q_vertices = tuple(next(iter_bits(w.subset)) for w in witnesses)
        g = auxiliary_graph(c)
        q_mask = 0
        for v in q_vertices:
            q_mask |= 1 << v
        clique_ok = len(set(q_vertices)) == m and all(
            g.adj[v] & (q_mask & ~(1 << v)) == q_mask & ~(1 << v) for v in q_vertices
        )
        coverage_ok = all(g.adj[w] & q_mask for w in range(n) if not (q_mask >> w) & 1)
        z = max(sorted(q_vertices), key=lambda v: (g.degree(v), -v))
        d = g.degree(z)
        e_z = q_vertices.index(z)
        size_ez = c.edges[e_z].bit_count()
        containing_z = sum(1 for e in c.edges if (e >> z) & 1)
        denom = m * (n + 2) - m * m - n
        final = Fraction(m, denom) if denom > 0 else Fraction(0)
        chain = (
            Inequality("z lies in exactly one edge", containing_z, "==", 1),
            Inequality("m*d(z) >= m*(m-1) + (n-m)", m * d, ">=", m * (m - 1) + (n - m)),
            Inequality("|e_z| <= n - d(z)", size_ez, "<=", n - d),
            Inequality("m <= n", m, "<=", n),
            Inequality("(m^2 - n)^2 >= 0", (m * m - n) ** 2, ">=", 0),
            Inequality("m^2 + n <= m*(n+1)", m * m + n, "<=", m * (n + 1)),
            Inequality("m*(n+2) - m^2 - n > 0", denom, ">", 0),
            Inequality("c(e_z) >= m/(m*(n+2) - m^2 - n)", Fraction(1, size_ez), ">=", final),
            Inequality("c(L) >= c(e_z)", hardness, ">=", Fraction(1, size_ez)),
        )
        trace = ProofTrace(
            "AllSingletons", n, m, hardness, q_vertices, g, clique_ok, coverage_ok,
            z, d, e_z, None, chain, final, compare_main_bound(final, n).relation,
        )
    failed = trace.failures()
    if failed:
        raise TraceAssertionFailed(trace, failed)
    return trace


# -- JSON -------------------------------------------------------------------


def _num_to_json(x: Number):
    return rational_to_dict(x) if isinstance(x, Fraction) else int_to_json(x)


def _num_from_json(x) -> Number:
    return rational_from_dict(x) if isinstance(x, dict) else int_from_json(x)


def comparison_to_dict(b: Optional[BoundComparison]):
    if b is None:
        return None
    return {"relation": b.relation.value, "lhs": rational_to_dict(b.lhs), "n": int_to_json(b.n), "kind": b.kind}


def comparison_from_dict(d) -> Optional[BoundComparison]:
    if d is None:
        return None
    return BoundComparison(Relation(d["relation"]), rational_from_dict(d["lhs"]), int_from_json(d["n"]), d["kind"])


def theorem_report_to_dict(r: TheoremReport) -> dict:
    return {
        "n": int_to_json(r.n),
        "m": int_to_json(r.m),
        "c1": r.c1,
        "c2": r.c2,
        "hardness": rational_to_dict(r.hardness),
        "comparison": comparison_to_dict(r.comparison),
        "applicable": r.applicable,
    }


def theorem_report_from_dict(d: dict) -> TheoremReport:
    return TheoremReport(
        int_from_json(d["n"]), int_from_json(d["m"]), d["c1"], d["c2"],
        rational_from_dict(d["hardness"]), comparison_from_dict(d["comparison"]), d["applicable"],
    )


def _opt_int(x):
    return None if x is None else int_to_json(x)


def _opt_int_from(x):
    return None if x is None else int_from_json(x)


def proof_trace_to_dict(t: ProofTrace) -> dict:
    g = t.aux_graph
    return {
        "branch": t.branch,
        "n": int_to_json(t.n),
        "m": int_to_json(t.m),
        "hardness": rational_to_dict(t.hardness),
        "recognizer_vertices": [int_to_json(v) for v in t.recognizer_vertices],
        "aux_graph": None if g is None else {
            "vertices": list(g.labels),
            "edges": [[u, v] for u, v in g.edges()],
        },
        "clique_ok": t.clique_ok,
        "coverage_ok": t.coverage_ok,
        "z": _opt_int(t.z),
        "degree_z": _opt_int(t.degree_z),
        "e_z": _opt_int(t.e_z),
        "two_plus_edge": _opt_int(t.two_plus_edge),
        "chain": [
            {"name": q.name, "lhs": _num_to_json(q.lhs), "op": q.op, "rhs": _num_to_json(q.rhs), "holds": q.holds}
            for q in t.chain
        ],
        "final_value": rational_to_dict(t.final_value),
        "final_relation": t.final_relation.value,
    }


def proof_trace_from_dict(d: dict) -> ProofTrace:
    g = d["aux_graph"]
    graph = None
    if g is not None:
        graph = Graph.from_edges(len(g["vertices"]), [tuple(e) for e in g["edges"]], g["vertices"])
    return ProofTrace(
        d["branch"],
        int_from_json(d["n"]),
        int_from_json(d["m"]),
        rational_from_dict(d["hardness"]),
        tuple(int_from_json(v) for v in d["recognizer_vertices"]),
        graph,
        d["clique_ok"],
        d["coverage_ok"],
        _opt_int_from(d["z"]),
        _opt_int_from(d["degree_z"]),
        _opt_int_from(d["e_z"]),
        _opt_int_from(d["two_plus_edge"]),
        tuple(
            Inequality(q["name"], _num_from_json(q["lhs"]), q["op"], _num_from_json(q["rhs"]))
            for q in d["chain"]
        ),
        rational_from_dict(d["final_value"]),
        Relation(d["final_relation"]),
    )
