"""Trigonometric cyclic 4-polytopes, Gale's evenness condition, and polars.

All geometry lives in Q(sqrt 2): the curve (cos u, sin u, cos 2u, sin 2u)
is evaluated only at multiples of pi/4, where every coordinate is
0, +-1 or +-sqrt(2)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .complexes import OrientationData, SimplePolytope, SimplicialComplex, dualize
from .errors import (
    DegeneracyError,
    FieldCoverageError,
    IncidenceError,
    PolarityError,
    RankError,
    RealizationInconsistencyError,
    ValidationError,
)
from .exactnum import (
    SQRT2_ONE,
    SQRT2_ZERO,
    Sqrt2Number,
    coerce_sqrt2,
    det_field,
    matrix_rank,
    solve_linear,
    strict_feasibility,
)

_HALF_ROOT = Sqrt2Number(Fraction(0), Fraction(1, 2))  # sqrt(2)/2

# cos and sin at k*pi/4 for k = 0..7
_COS = {
    0: SQRT2_ONE,
    1: _HALF_ROOT,
    2: SQRT2_ZERO,
    3: -_HALF_ROOT,
    4: -SQRT2_ONE,
    5: -_HALF_ROOT,
    6: SQRT2_ZERO,
    7: _HALF_ROOT,
}
_SIN = {
    0: SQRT2_ZERO,
    1: _HALF_ROOT,
    2: SQRT2_ONE,
    3: _HALF_ROOT,
    4: SQRT2_ZERO,
    5: -_HALF_ROOT,
    6: -SQRT2_ONE,
    7: -_HALF_ROOT,
}

Vector = Tuple[Sqrt2Number, ...]


@dataclass(frozen=True)
class AngleSpec:
    """Distinct, strictly increasing angles k*pi/4 with 0 <= k < 8."""

    eighth_turns: Tuple[int, ...]

    def __post_init__(self):
        ks = self.eighth_turns
        if any(not isinstance(k, int) or not 0 <= k < 8 for k in ks):
            raise FieldCoverageError(
                f"angles must be integer multiples k*pi/4 with 0 <= k < 8, got {ks}"
            )
        if any(a >= b for a, b in zip(ks, ks[1:])):
            raise ValidationError(f"angles must be strictly increasing, got {ks}")

    def __len__(self) -> int:
        return len(self.eighth_turns)


def caratheodory_point(eighth_turn: int) -> Vector:
    """Exact curve value (cos u, sin u, cos 2u, sin 2u) at u = k*pi/4."""
    k = eighth_turn
    if not isinstance(k, int) or not 0 <= k < 8:
        raise FieldCoverageError(f"angle {k}*pi/4 outside the supported range")
    k2 = (2 * k) % 8
    return (_COS[k], _SIN[k], _COS[k2], _SIN[k2])


@dataclass(frozen=True)
class CaratheodoryRealization:
    """Curve points at the given angles; vertex i is points[i-1]."""

    angles: AngleSpec
    points: Tuple[Vector, ...]

    @classmethod
    def of(cls, eighth_turns: Sequence[int]) -> "CaratheodoryRealization":
        angles = AngleSpec(tuple(int(k) for k in eighth_turns))
        return cls(angles, tuple(caratheodory_point(k) for k in angles.eighth_turns))

    @property
    def n(self) -> int:
        return len(self.points)


def gale_facets(n: int, d: int = 4) -> List[Tuple[int, ...]]:
    """All d-subsets of {1..n} satisfying Gale's evenness condition.

    Y is kept iff for every pair i < j outside Y, the number of elements
    of Y strictly between i and j is even.  Output is lexicographic.
    """
    if n <= d:
        raise ValidationError(f"need n > d for a cyclic polytope, got n={n}, d={d}")
    out = []
    for cand in combinations(range(1, n + 1), d):
        cset = set(cand)
        outside = [i for i in range(1, n + 1) if i not in cset]
        ok = True
        for a, b in combinations(outside, 2):
            if sum(1 for y in cand if a < y < b) % 2:
                ok = False
                break
        if ok:
            out.append(cand)
    return out


def _affine_functional(points: Sequence[Vector]) -> Tuple[Vector, Sqrt2Number]:
    """Hyperplane <a, x> + c = 0 through d affinely independent points in R^d.

    Returns (a, c), a nonzero kernel vector of the homogenized point matrix.
    Raises DegeneracyError when the points are affinely dependent.
    """
    d = len(points[0])
    if len(points) != d:
        raise DegeneracyError(f"need exactly {d} points, got {len(points)}")
    rows = [[coerce_sqrt2(x) for x in p] + [SQRT2_ONE] for p in points]
    cols = d + 1
    pivots: List[int] = []
    rank = 0
    for col in range(cols):
        pivot = None
        for i in range(rank, d):
            if not rows[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col].inverse()
        rows[rank] = [x * pv for x in rows[rank]]
        for i in range(d):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    if rank < d:
        raise DegeneracyError("points are affinely dependent")
    free = next(c for c in range(cols) if c not in pivots)
    kernel = [SQRT2_ZERO] * cols
    kernel[free] = SQRT2_ONE
    for r, col in enumerate(pivots):
        kernel[col] = -rows[r][free]
    return tuple(kernel[:d]), kernel[d]


def verify_facets_geometric(
    r: CaratheodoryRealization, candidate: Sequence[int]
) -> bool:
    """Exact supporting-hyperplane test for a candidate facet.

    Solves for the hyperplane through the candidate points and checks that
    every remaining point lies strictly on one common side.
    """
    return _is_facet([r.points[i - 1] for i in candidate],
                     [p for i, p in enumerate(r.points, start=1) if i not in set(candidate)])


def _is_facet(candidate_points: Sequence[Vector], others: Sequence[Vector]) -> bool:
    normal, offset = _affine_functional(candidate_points)
    side = 0
    for q in others:
        val = sum((a * x for a, x in zip(normal, q)), offset)
        s = val.sign()
        if s == 0:
            return False
        if side == 0:
            side = s
        elif s != side:
            return False
    return side != 0


def contains_origin_interior(r_or_points) -> bool:
    """Whether 0 lies in the interior of the convex hull, exactly.

    Requires the points to span the ambient space; decided by a strict
    feasibility test for 0 as a positive combination of the points.
    """
    points = r_or_points.points if isinstance(r_or_points, CaratheodoryRealization) else tuple(
        tuple(coerce_sqrt2(x) for x in p) for p in r_or_points
    )
    d = len(points[0])
    if matrix_rank(points) < d:
        raise RankError("points do not span the ambient space")
    n = len(points)
    equations = [
        ([p[coord] for p in points], 0) for coord in range(d)
    ]
    result = strict_feasibility(equations, n, range(1, n + 1))
    return result.feasible


@dataclass(frozen=True)
class PolarPolytope:
    """The polar dual: combinatorics plus exact vertex coordinates.

    Facet i of the polar corresponds to primal point i; its supporting
    functional is <p_i, y> <= 1.  vertex_coords is aligned with
    polytope.vertices.
    """

    polytope: SimplePolytope
    vertex_coords: Tuple[Vector, ...]
    facet_points: Tuple[Vector, ...]


def build_polar_from_points(
    points: Sequence[Sequence],
    expected_facets: Optional[Sequence[Tuple[int, ...]]] = None,
) -> PolarPolytope:
    """Polar dual of conv(points) for points spanning R^d with 0 interior.

    Facets are found by the exact supporting-hyperplane test over all
    d-subsets; polar vertices solve <u, p_i> = 1 over the facet's points.
    When expected_facets is given the geometric facet list must match it.
    """
    pts: Tuple[Vector, ...] = tuple(
        tuple(coerce_sqrt2(x) for x in p) for p in points
    )
    n = len(pts)
    d = len(pts[0])
    if not contains_origin_interior(pts):
        raise PolarityError("origin is not interior; polar dual undefined")
    facets = []
    for cand in combinations(range(1, n + 1), d):
        cset = set(cand)
        others = [p for i, p in enumerate(pts, start=1) if i not in cset]
        try:
            if _is_facet([pts[i - 1] for i in cand], others):
                facets.append(cand)
        except DegeneracyError:
            continue
    if expected_facets is not None:
        if sorted(tuple(sorted(f)) for f in expected_facets) != facets:
            raise RealizationInconsistencyError(
                "geometric facets disagree with the combinatorial prediction"
            )
    complex_ = SimplicialComplex.of(n, facets)
    polytope = dualize(complex_)
    ones = [SQRT2_ONE] * d
    coords = []
    for vertex in polytope.vertices:
        rows = [pts[i - 1] for i in sorted(vertex)]
        coords.append(solve_linear(rows, ones))
    return PolarPolytope(polytope, tuple(coords), pts)


def build_polar(r: CaratheodoryRealization) -> PolarPolytope:
    """Polar dual of a Caratheodory realization, cross-checked against
    Gale's evenness condition."""
    return build_polar_from_points(r.points, gale_facets(r.n, 4))


def vertex_orientation_tuples(p: PolarPolytope) -> OrientationData:
    """Positively ordered facet tuples at every vertex of the polar.

    Edge vector k at a vertex points toward the unique neighbor obtained by
    dropping the k-th facet; the tuple is permuted by one transposition when
    needed so that det(e_1 ... e_n) > 0, exactly.
    """
    poly = p.polytope
    n = poly.dimension
    index_of = {v: i for i, v in enumerate(poly.vertices)}
    tuples = []
    for vi, vertex in enumerate(poly.vertices):
        base = sorted(vertex)
        edge_vectors = []
        for f in base:
            ridge = vertex - {f}
            neighbor = None
            for wi, w in enumerate(poly.vertices):
                if wi != vi and ridge <= w:
                    if neighbor is not None:
                        raise IncidenceError(
                            f"ridge {sorted(ridge)} has multiple neighbors"
                        )
                    neighbor = wi
            if neighbor is None:
                raise IncidenceError(
                    f"vertex {base}: no neighbor across ridge {sorted(ridge)}"
                )
            edge_vectors.append(
                tuple(
                    a - b
                    for a, b in zip(p.vertex_coords[neighbor], p.vertex_coords[vi])
                )
            )
        # determinant of the matrix whose columns are the edge vectors
        det = det_field(
            [[edge_vectors[j][i] for j in range(n)] for i in range(n)]
        )
        s = det.sign()
        if s == 0:
            raise IncidenceError(f"degenerate edge vectors at vertex {base}")
        if s > 0:
            tuples.append(tuple(base))
        else:
            tuples.append((base[1], base[0]) + tuple(base[2:]))
    return OrientationData(tuple(tuples))


def permutation_parity(src: Sequence[int], dst: Sequence[int]) -> int:
    """+1 if dst is an even permutation of src, -1 if odd."""
    if sorted(src) != sorted(dst):
        raise ValidationError(f"{dst} is not a permutation of {src}")
    perm = [list(dst).index(x) for x in src]
    parity = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


@dataclass(frozen=True)
class OrientationComparison:
    """Outcome of comparing tuple families up to even permutation per tuple.

    case is "same" (every computed tuple an even permutation of its
    reference), "reversed" (every one odd: a single global reversal), or
    "mixed" (no global orientation explains the reference list).
    parities maps each vertex label to +1/-1.
    """

    case: str
    parities: Tuple[Tuple[str, int], ...]

    def minority(self) -> List[str]:
        """Labels carrying the minority parity (empty unless mixed)."""
        if self.case != "mixed":
            return []
        plus = [lbl for lbl, p in self.parities if p > 0]
        minus = [lbl for lbl, p in self.parities if p < 0]
        return minus if len(minus) <= len(plus) else plus


def compare_orientation_tuples(
    computed: OrientationData, reference: Sequence[Sequence[int]]
) -> OrientationComparison:
    """Compare computed tuples against a reference list, per-tuple parity."""
    ref_by_set: Dict[frozenset, Tuple[int, ...]] = {
        frozenset(t): tuple(t) for t in reference
    }
    if len(ref_by_set) != len(computed.tuples):
        raise ValidationError("reference does not cover the computed vertex set")
    parities = []
    for t in computed.tuples:
        key = frozenset(t)
        if key not in ref_by_set:
            raise ValidationError(f"tuple {t} has no reference counterpart")
        label = "".join(str(i) for i in sorted(t))
        parities.append((label, permutation_parity(t, ref_by_set[key])))
    values = {p for _, p in parities}
    if values == {1}:
        case = "same"
    elif values == {-1}:
        case = "reversed"
    else:
        case = "mixed"
    return OrientationComparison(case, tuple(parities))
