"""Exact scalar and linear-algebra kernel.

Everything here is exact: arbitrary-precision rationals (stdlib Fraction),
the quadratic field Q(sqrt 2), fraction-free integer determinants, GF(2)
linear systems with infeasibility certificates, and a strict-feasibility
rational LP (phase-1 simplex with Bland's rule).  No floating point is used
anywhere in a decision path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import DimensionError, SingularMatrixError

# The stdlib Fraction is already an exact big rational stored in lowest terms
# with positive denominator, which is exactly the BigRational contract.
BigRational = Fraction

Rationalish = Union[int, Fraction]


def _frac(x: Rationalish) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# Q(sqrt 2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Sqrt2Number:
    """An element a + b*sqrt(2) of Q(sqrt 2) with exact rational a, b."""

    rat: Fraction = Fraction(0)
    sqrt2: Fraction = Fraction(0)

    @staticmethod
    def of(rat: Rationalish = 0, sqrt2: Rationalish = 0) -> "Sqrt2Number":
        return Sqrt2Number(_frac(rat), _frac(sqrt2))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Sqrt2Number":
        o = coerce_sqrt2(other)
        return Sqrt2Number(self.rat + o.rat, self.sqrt2 + o.sqrt2)

    __radd__ = __add__

    def __neg__(self) -> "Sqrt2Number":
        return Sqrt2Number(-self.rat, -self.sqrt2)

    def __sub__(self, other) -> "Sqrt2Number":
        return self + (-coerce_sqrt2(other))

    def __rsub__(self, other) -> "Sqrt2Number":
        return coerce_sqrt2(other) - self

    def __mul__(self, other) -> "Sqrt2Number":
        o = coerce_sqrt2(other)
        return Sqrt2Number(
            self.rat * o.rat + 2 * self.sqrt2 * o.sqrt2,
            self.rat * o.sqrt2 + self.sqrt2 * o.rat,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Sqrt2Number":
        # (a + b*sqrt2)(a - b*sqrt2) = a^2 - 2 b^2, the field norm
        norm = self.rat * self.rat - 2 * self.sqrt2 * self.sqrt2
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        return Sqrt2Number(self.rat / norm, -self.sqrt2 / norm)

    def __truediv__(self, other) -> "Sqrt2Number":
        return self * coerce_sqrt2(other).inverse()

    def __rtruediv__(self, other) -> "Sqrt2Number":
        return coerce_sqrt2(other) * self.inverse()

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(2), decided without floating point."""
        a, b = self.rat, self.sqrt2
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb:
            return sa
        if sa == 0:
            return sb
        if sb == 0:
            return sa
        # opposite signs: |a| vs |b|*sqrt2, i.e. a^2 vs 2 b^2
        # (equality is impossible for rationals with b != 0)
        return sa if a * a > 2 * b * b else sb

    def is_zero(self) -> bool:
        return self.rat == 0 and self.sqrt2 == 0

    def is_rational(self) -> bool:
        return self.sqrt2 == 0

    def to_fraction(self) -> Fraction:
        if self.sqrt2 != 0:
            raise ValueError(f"{self} is not rational")
        return self.rat

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            o = coerce_sqrt2(other)
        except TypeError:
            return NotImplemented
        return self.rat == o.rat and self.sqrt2 == o.sqrt2

    def __hash__(self) -> int:
        return hash((self.rat, self.sqrt2))

    def __lt__(self, other) -> bool:
        return (self - coerce_sqrt2(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - coerce_sqrt2(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - coerce_sqrt2(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - coerce_sqrt2(other)).sign() >= 0

    def __repr__(self) -> str:
        return f"({self.rat} + {self.sqrt2}*sqrt2)"


SQRT2_ZERO = Sqrt2Number()
SQRT2_ONE = Sqrt2Number(Fraction(1))
SQRT2_HALF_ROOT = Sqrt2Number(Fraction(0), Fraction(1, 2))  # sqrt(2)/2


def coerce_sqrt2(x) -> Sqrt2Number:
    if isinstance(x, Sqrt2Number):
        return x
    if isinstance(x, (int, Fraction)):
        return Sqrt2Number(_frac(x))
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(sqrt 2)")


def sign_sqrt2(x: Sqrt2Number) -> int:
    return coerce_sqrt2(x).sign()


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix in row-major order."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionError("ragged rows")
        return cls(r, c, tuple(int(x) for row in rows for x in row))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        c = len(cols)
        r = len(cols[0]) if c else 0
        if any(len(col) != r for col in cols):
            raise DimensionError("ragged columns")
        return cls(r, c, tuple(cols[j][i] for i in range(r) for j in range(c)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row_lists(self) -> List[List[int]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]


def det_int(m: Union[IntMatrix, Sequence[Sequence[int]]]) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if isinstance(m, IntMatrix):
        if m.rows != m.cols:
            raise DimensionError(f"determinant of {m.rows}x{m.cols} matrix")
        a = m.row_lists()
    else:
        a = [[int(x) for x in row] for row in m]
        if any(len(row) != len(a) for row in a):
            raise DimensionError("determinant of non-square matrix")
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_primitive(vector: Sequence[int]) -> bool:
    g = 0
    for x in vector:
        g = gcd(g, abs(int(x)))
    return g == 1


# ---------------------------------------------------------------------------
# Exact linear solving over Q(sqrt 2)
# ---------------------------------------------------------------------------


def solve_linear(
    a: Sequence[Sequence], b: Sequence
) -> Tuple[Sqrt2Number, ...]:
    """Solve a square system exactly in Q(sqrt 2) by Gaussian elimination.

    Raises SingularMatrixError carrying the rank when a is not invertible.
    """
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise DimensionError("solve_linear needs a square system")
    aug = [
        [coerce_sqrt2(x) for x in row] + [coerce_sqrt2(b[i])]
        for i, row in enumerate(a)
    ]
    rank = 0
    for col in range(n):
        pivot = None
        for i in range(rank, n):
            if not aug[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [x / pv for x in aug[rank]]
        for i in range(n):
            if i != rank and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rank])]
        rank += 1
    if rank < n:
        raise SingularMatrixError(rank)
    # rows are now a permuted identity; read the solution off by pivot column
    x: List[Optional[Sqrt2Number]] = [None] * n
    for row in aug:
        for col in range(n):
            if not row[col].is_zero():
                x[col] = row[n]
                break
    return tuple(v if v is not None else SQRT2_ZERO for v in x)


def det_field(a: Sequence[Sequence]) -> Sqrt2Number:
    """Exact determinant over Q(sqrt 2) by elimination with row swaps."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionError("determinant of non-square matrix")
    m = [[coerce_sqrt2(x) for x in row] for row in a]
    det = SQRT2_ONE
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if not m[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            return SQRT2_ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for i in range(col + 1, n):
            if not m[i][col].is_zero():
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det


def matrix_rank(a: Sequence[Sequence]) -> int:
    """Rank over Q(sqrt 2), exact."""
    m = [[coerce_sqrt2(x) for x in row] for row in a]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        pivot = None
        for i in range(rank, rows):
            if not m[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col].inverse()
        for i in range(rank + 1, rows):
            if not m[i][col].is_zero():
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


# ---------------------------------------------------------------------------
# GF(2) linear systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Gf2System:
    """Linear system over GF(2); variables are labeled 1..num_vars.

    Each equation is (support, rhs): the variables in `support` must sum
    to `rhs` mod 2.
    """

    num_vars: int
    equations: Tuple[Tuple[frozenset, int], ...]

    @classmethod
    def of(cls, num_vars: int, equations: Iterable[Tuple[Iterable[int], int]]):
        eqs = tuple(
            (frozenset(int(v) for v in support), int(rhs) & 1)
            for support, rhs in equations
        )
        for support, _ in eqs:
            for v in support:
                if not 1 <= v <= num_vars:
                    raise DimensionError(f"variable {v} out of range 1..{num_vars}")
        return cls(num_vars, eqs)


@dataclass(frozen=True)
class Gf2Result:
    """Either a solution (with solution-space dimension) or a certificate.

    The certificate is a set of 1-based equation indices whose GF(2) sum is
    the inconsistent equation 0 = 1.
    """

    solution: Optional[Tuple[int, ...]]
    dimension: Optional[int]
    certificate: Optional[Tuple[int, ...]]

    @property
    def feasible(self) -> bool:
        return self.solution is not None


def gf2_solve(system: Gf2System) -> Gf2Result:
    """Gaussian elimination over GF(2) with deterministic pivoting.

    Pivots are chosen by lowest variable index first, then lowest equation
    index, so the returned solution is reproducible.
    """
    n = system.num_vars
    # rows as (variable bitmask, rhs bit, combination bitmask over equations)
    work = []
    for idx, (support, rhs) in enumerate(system.equations):
        mask = 0
        for v in support:
            mask |= 1 << (v - 1)
        work.append([mask, rhs, 1 << idx])
    rank = 0
    pivot_rows = []  # (variable index, row)
    for var in range(n):
        bit = 1 << var
        pivot = None
        for i in range(rank, len(work)):
            if work[i][0] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and (work[i][0] & bit):
                work[i][0] ^= prow[0]
                work[i][1] ^= prow[1]
                work[i][2] ^= prow[2]
        pivot_rows.append((var, prow))
        rank += 1
    for mask, rhs, combo in work[rank:]:
        if mask == 0 and rhs == 1:
            cert = tuple(
                i + 1 for i in range(len(system.equations)) if (combo >> i) & 1
            )
            return Gf2Result(None, None, cert)
    # free variables set to 0; after Jordan elimination each pivot row has
    # only its pivot among pivot variables, so the pivot value is the rhs
    solution = [0] * n
    for var, row in pivot_rows:
        solution[var] = row[1]
    return Gf2Result(tuple(solution), n - rank, None)


# ---------------------------------------------------------------------------
# Strict feasibility via exact phase-1 simplex
# ---------------------------------------------------------------------------


def _phase1_simplex(
    rows: List[List[Sqrt2Number]], rhs: List[Sqrt2Number]
) -> Optional[List[Sqrt2Number]]:
    """Find x >= 0 with A x = b exactly, or None if infeasible.

    Phase-1 simplex with Bland's rule (lowest eligible index), which
    guarantees termination.  All arithmetic is in Q(sqrt 2).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    tab = []
    for i in range(m):
        row = list(rows[i])
        b = rhs[i]
        if b.sign() < 0:
            row = [-x for x in row]
            b = -b
        unit = [SQRT2_ONE if j == i else SQRT2_ZERO for j in range(m)]
        tab.append(row + unit + [b])
    basis = [n + i for i in range(m)]
    width = n + m
    # reduced-cost row for minimizing the sum of artificials
    obj = [SQRT2_ZERO] * (width + 1)
    for j in range(n):
        obj[j] = -sum((tab[i][j] for i in range(m)), SQRT2_ZERO)
    obj[width] = -sum((tab[i][width] for i in range(m)), SQRT2_ZERO)

    while True:
        entering = None
        for j in range(width):
            if obj[j].sign() < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            coef = tab[i][entering]
            if coef.sign() > 0:
                ratio = tab[i][width] / coef
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leaving])
                ):
                    best = ratio
                    leaving = i
        if leaving is None:
            # phase-1 objective is bounded below by 0; unreachable
            raise AssertionError("unbounded phase-1 simplex")
        pv = tab[leaving][entering]
        tab[leaving] = [x / pv for x in tab[leaving]]
        for i in range(m):
            if i != leaving and not tab[i][entering].is_zero():
                f = tab[i][entering]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leaving])]
        if not obj[entering].is_zero():
            f = obj[entering]
            obj = [x - f * y for x, y in zip(obj, tab[leaving])]
        basis[leaving] = entering

    if obj[width].sign() != 0:  # optimum = -obj[width]
        return None
    x = [SQRT2_ZERO] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][width]
    return x


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: Optional[Tuple[Sqrt2Number, ...]]


def strict_feasibility(
    equations: Sequence[Tuple[Sequence, object]],
    num_vars: int,
    strict_positive: Iterable[int],
) -> FeasibilityResult:
    """Decide solvability of exact linear equalities with some variables > 0.

    `equations` is a list of (coefficients, rhs) with variables labeled
    1..num_vars; variables in `strict_positive` must be > 0, the rest are
    free.  Strict variables are substituted v = 1 + s with s >= 0 and free
    variables v = u - w, then an exact phase-1 simplex decides feasibility.
    The substitution is lossless for positively homogeneous systems (cones),
    which is how every caller in this package uses it.
    """
    strict = set(int(v) for v in strict_positive)
    for v in strict:
        if not 1 <= v <= num_vars:
            raise DimensionError(f"variable {v} out of range 1..{num_vars}")
    # column layout: one slack per strict var, (u, w) pair per free var
    columns: List[Tuple[int, int]] = []  # (variable, +1/-1 multiplier)
    for v in range(1, num_vars + 1):
        if v in strict:
            columns.append((v, 1))
        else:
            columns.append((v, 1))
            columns.append((v, -1))
    rows: List[List[Sqrt2Number]] = []
    rhs: List[Sqrt2Number] = []
    for coeffs, b in equations:
        if len(coeffs) != num_vars:
            raise DimensionError("coefficient row has wrong length")
        cs = [coerce_sqrt2(c) for c in coeffs]
        shift = sum((cs[v - 1] for v in strict), SQRT2_ZERO)
        rows.append([cs[var - 1] * mult for var, mult in columns])
        rhs.append(coerce_sqrt2(b) - shift)
    x = _phase1_simplex(rows, rhs) if rows else [SQRT2_ZERO] * len(columns)
    if x is None:
        return FeasibilityResult(False, None)
    witness = [SQRT2_ZERO] * num_vars
    for value, (var, mult) in zip(x, columns):
        witness[var - 1] = witness[var - 1] + (value if mult > 0 else -value)
    for v in strict:
        witness[v - 1] = witness[v - 1] + SQRT2_ONE
    return FeasibilityResult(True, tuple(witness))
