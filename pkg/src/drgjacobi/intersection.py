"""Distance-regularity certification and intersection sequences.

A graph is distance-regular when, for every ordered pair (i, j) at
distance k, the number of neighbors of j one step closer to i and one
step farther from i depend only on k. Those counts form the
intersection sequence {(a_k, b_k)}, k = 1..d, with b_1 the common
degree. All counting here is exact integer arithmetic; derived degree
values use exact rationals with an integrality assertion, because
certificates must not inherit float drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, _bfs


class SequenceError(Exception):
    """An (a, b) pair list violates an intersection sequence invariant."""


class NonIntegralDegreeError(SequenceError):
    def __init__(self, k: int, value: Fraction):
        self.k = k
        self.value = value
        super().__init__(f"distance-{k} degree {value} is not an integer")


class NonIntegralCountError(SequenceError):
    def __init__(self, k: int, numerator: int):
        self.k = k
        super().__init__(f"distance-{k} isoscycle count {numerator}/2 is not an integer")


class TooSmallError(SequenceError):
    """Certification needs at least two vertices."""


@dataclass(frozen=True)
class IntersectionSequence:
    """The pairs {(a_k, b_k)}, k = 1..d, of a distance-regular graph.

    a[0] is a_1 (always 1), b[0] is b_1 (the degree). The diagonal
    values alpha_k = degree - (a_k + b_{k+1}) are nonnegative, with
    alpha_0 = 0 and the top value defined as degree - a_d.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b) or not self.a:
            raise SequenceError("a and b must be equal-length nonempty lists")
        for name, seq in (("a", self.a), ("b", self.b)):
            for x in seq:
                if not isinstance(x, int) or x < 1:
                    raise SequenceError(f"{name} entries must be positive integers")
        if self.a[0] != 1:
            raise SequenceError("a_1 must equal 1")
        for k in range(1, self.d):
            if self.degree - (self.a[k - 1] + self.b[k]) < 0:
                raise SequenceError(f"alpha_{k} is negative")
        if self.tau_star < 0:
            raise SequenceError("degree - a_d is negative")
        degree_sequence(self)  # raises NonIntegralDegreeError on bad input

    @property
    def d(self) -> int:
        """Diameter."""
        return len(self.a)

    @property
    def degree(self) -> int:
        return self.b[0]

    @property
    def tau_star(self) -> int:
        """The boundary value degree - a_d."""
        return self.degree - self.a[-1]

    @property
    def alphas(self) -> tuple[int, ...]:
        """Diagonal values alpha_0 .. alpha_d (alpha_d := degree - a_d)."""
        inner = tuple(
            self.degree - (self.a[k - 1] + self.b[k]) for k in range(1, self.d)
        )
        return (0,) + inner + (self.tau_star,)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "a": list(self.a),
            "b": list(self.b),
            "degree": self.degree,
            "alpha": list(self.alphas),
            "deg_k": degree_sequence(self),
        }


@dataclass(frozen=True)
class NonRegularityWitness:
    """Two ordered vertex pairs at equal distance with differing counts.

    kind is "NotRegular" (degree divergence, reported as the b-type count
    at distance 0) or "NotDistanceRegular". count_type says which count
    diverged: "a" (neighbors one step closer) or "b" (one step farther).
    """

    kind: str
    distance: int
    count_type: str
    first_pair: tuple[int, int]
    first_count: int
    second_pair: tuple[int, int]
    second_count: int

    def recount(self, g: Graph) -> tuple[int, int]:
        """Recompute both counts from scratch; checkable against the fields."""
        return (
            _pair_count(g, self.first_pair, self.distance, self.count_type),
            _pair_count(g, self.second_pair, self.distance, self.count_type),
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "distance": self.distance,
            "count_type": self.count_type,
            "first_pair": list(self.first_pair),
            "first_count": self.first_count,
            "second_pair": list(self.second_pair),
            "second_count": self.second_count,
        }


def _pair_count(g: Graph, pair: tuple[int, int], k: int, count_type: str) -> int:
    i, j = pair
    dist = _bfs(g.adjacency, i)
    if dist[j] != k:
        raise ValueError(f"pair {pair} is at distance {dist[j]}, not {k}")
    target = k - 1 if count_type == "a" else k + 1
    return sum(1 for u in g.adjacency[j] if dist[u] == target)


def certify_distance_regular(g: Graph):
    """Certify distance-regularity of g.

    Returns the IntersectionSequence on success, else a recheckable
    NonRegularityWitness. Regularity (constant degree) is checked first;
    then, per distance class, constancy of both neighbor-intersection
    counts, short-circuiting on the first divergence.
    """
    n = g.vertex_count
    if n < 2:
        raise TooSmallError("need at least two vertices")

    degree = g.degree(0)
    for v in range(1, n):
        if g.degree(v) != degree:
            return NonRegularityWitness(
                "NotRegular", 0, "b", (0, 0), degree, (v, v), g.degree(v)
            )

    a_ref: dict[int, tuple[int, tuple[int, int]]] = {}
    b_ref: dict[int, tuple[int, tuple[int, int]]] = {}
    for i in range(n):
        dist = _bfs(g.adjacency, i)
        for j in range(n):
            k = dist[j]
            if k == 0:
                continue
            a_count = sum(1 for u in g.adjacency[j] if dist[u] == k - 1)
            b_count = sum(1 for u in g.adjacency[j] if dist[u] == k + 1)
            for count_type, count, ref in (("a", a_count, a_ref), ("b", b_count, b_ref)):
                prev = ref.get(k)
                if prev is None:
                    ref[k] = (count, (i, j))
                elif prev[0] != count:
                    return NonRegularityWitness(
                        "NotDistanceRegular", k, count_type,
                        prev[1], prev[0], (i, j), count,
                    )

    d = max(a_ref)
    a = tuple(a_ref[k][0] for k in range(1, d + 1))
    b = (degree,) + tuple(b_ref[k][0] for k in range(1, d))
    return IntersectionSequence(a, b)


def degree_sequence(seq: IntersectionSequence) -> list[int]:
    """Common distance-k degrees deg(A_k) = prod_{m<=k} b_m/a_m, k = 0..d.

    Computed in exact rational arithmetic; a non-integer value raises
    NonIntegralDegreeError, signalling an invalid sequence.
    """
    values = [1]
    acc = Fraction(1)
    for k, (a_k, b_k) in enumerate(zip(seq.a, seq.b), 1):
        acc *= Fraction(b_k, a_k)
        if acc.denominator != 1:
            raise NonIntegralDegreeError(k, acc)
        values.append(int(acc))
    return values


def isoscycle_numbers(seq: IntersectionSequence) -> list[int]:
    """Common isoscycle counts (alpha_k / 2) * deg(A_k), k = 0..d."""
    degrees = degree_sequence(seq)
    alphas = seq.alphas
    values = []
    for k in range(seq.d + 1):
        doubled = alphas[k] * degrees[k]
        if doubled % 2:
            raise NonIntegralCountError(k, doubled)
        values.append(doubled // 2)
    return values


@dataclass(frozen=True)
class RecurrenceCheck:
    """Outcome of the exact distance-matrix recurrence check.

    Falsy when some entry mismatches; mismatch holds the first failing
    (k, i, j, lhs, rhs).
    """

    ok: bool
    mismatch: tuple[int, int, int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _dense_distance_stack(g: Graph, d: int) -> list[np.ndarray]:
    mats = [np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64) for _ in range(d + 1)]
    for i in range(g.vertex_count):
        for j, dij in enumerate(_bfs(g.adjacency, i)):
            if dij <= d:
                mats[dij][i, j] = 1
    return mats


def verify_recurrence(g: Graph, seq: IntersectionSequence) -> RecurrenceCheck:
    """Check A*A_k = a_{k+1} A_{k+1} + alpha_k A_k + b_k A_{k-1} exactly.

    Holds entrywise in integer arithmetic for k = 0..d, with A_{-1} and
    A_{d+1} taken as zero and the k = d diagonal coefficient degree - a_d.
    """
    mats = _dense_distance_stack(g, seq.d)
    adjacency = mats[1]
    alphas = seq.alphas
    for k in range(seq.d + 1):
        lhs = adjacency @ mats[k]
        rhs = alphas[k] * mats[k]
        if k < seq.d:
            rhs = rhs + seq.a[k] * mats[k + 1]
        if k > 0:
            rhs = rhs + seq.b[k - 1] * mats[k - 1]
        if not np.array_equal(lhs, rhs):
            i, j = map(int, np.argwhere(lhs != rhs)[0])
            return RecurrenceCheck(False, (k, i, j, int(lhs[i, j]), int(rhs[i, j])))
    return RecurrenceCheck(True)


def distance_poly_eval(seq: IntersectionSequence, k: int, x):
    """Value at x of the degree-k polynomial p_k with p_k(A) = A_k.

    Evaluated through p_{k+1} = ((x - alpha_k) p_k - b_k p_{k-1}) / a_{k+1}.
    Exact (Fraction) for int/Fraction input, float otherwise; in
    particular p_k(degree) equals deg(A_k) exactly.
    """
    if not 0 <= k <= seq.d:
        raise ValueError(f"k must be in 0..{seq.d}")
    exact = isinstance(x, (int, Fraction)) and not isinstance(x, bool)
    xv = Fraction(x) if exact else float(x)
    alphas = seq.alphas
    p_prev, p_cur = None, Fraction(1) if exact else 1.0
    for m in range(k):
        nxt = (xv - alphas[m]) * p_cur
        if m > 0:
            nxt -= seq.b[m - 1] * p_prev
        nxt /= seq.a[m]  # a_{m+1}
        p_prev, p_cur = p_cur, nxt
    return p_cur


def sequence_from_pairs(pairs) -> IntersectionSequence:
    """Build an IntersectionSequence from (a_k, b_k) pairs in order k = 1..d."""
    pairs = list(pairs)
    return IntersectionSequence(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
