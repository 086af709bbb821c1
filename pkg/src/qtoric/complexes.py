"""Simplicial complexes, simple polytopes, f/h-vectors, and orientations.

Indices are 1-based everywhere (vertices 1..num_vertices, facets
1..num_facets) so that printed reports line up with the usual labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import NonOrientableError, ValidationError

FVector = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """A pure simplicial complex given by its facet list."""

    num_vertices: int
    facets: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if self.num_vertices < 1:
            raise ValidationError("complex needs at least one vertex")
        if not self.facets:
            raise ValidationError("facet list is empty")
        size = len(next(iter(self.facets)))
        seen = set()
        for f in self.facets:
            if len(f) != size:
                raise ValidationError(
                    f"non-pure complex: facet {sorted(f)} has size {len(f)}, "
                    f"expected {size}"
                )
            if f in seen:
                raise ValidationError(f"duplicate facet {sorted(f)}")
            seen.add(f)
            for v in f:
                if not 1 <= v <= self.num_vertices:
                    raise ValidationError(f"vertex {v} out of range")

    @classmethod
    def of(cls, num_vertices: int, facets: Iterable[Iterable[int]]):
        return cls(num_vertices, tuple(frozenset(int(v) for v in f) for f in facets))

    @property
    def dimension(self) -> int:
        return len(self.facets[0]) - 1


@dataclass(frozen=True)
class SimplePolytope:
    """Combinatorics of a simple polytope: vertices as facet-index sets."""

    num_facets: int
    dimension: int
    vertices: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        seen = set()
        used = set()
        for v in self.vertices:
            if len(v) != self.dimension:
                raise ValidationError(
                    f"vertex {sorted(v)} lies in {len(v)} facets, "
                    f"expected {self.dimension} (simplicity)"
                )
            if v in seen:
                raise ValidationError(f"duplicate vertex {sorted(v)}")
            seen.add(v)
            for f in v:
                if not 1 <= f <= self.num_facets:
                    raise ValidationError(f"facet index {f} out of range")
                used.add(f)
        if used != set(range(1, self.num_facets + 1)):
            missing = sorted(set(range(1, self.num_facets + 1)) - used)
            raise ValidationError(f"facets {missing} appear in no vertex")

    @classmethod
    def of(cls, num_facets: int, dimension: int, vertices: Iterable[Iterable[int]]):
        return cls(
            num_facets,
            dimension,
            tuple(frozenset(int(f) for f in v) for v in vertices),
        )

    def edges(self) -> List[Tuple[int, int]]:
        """Pairs of vertex positions (0-based) sharing dimension-1 facets."""
        out = []
        for i, j in combinations(range(len(self.vertices)), 2):
            if len(self.vertices[i] & self.vertices[j]) == self.dimension - 1:
                out.append((i, j))
        return out

    def facet_adjacency(self) -> List[Tuple[int, int]]:
        """Facet pairs meeting along an edge of the polytope."""
        pairs = set()
        for i, j in self.edges():
            shared = self.vertices[i] & self.vertices[j]
            for a, b in combinations(sorted(shared), 2):
                pairs.add((a, b))
        return sorted(pairs)


@dataclass(frozen=True)
class OrientationData:
    """Ordered incidence tuples: per-vertex facet tuples for a simple
    polytope, or per-facet vertex tuples for a simplicial sphere."""

    tuples: Tuple[Tuple[int, ...], ...]
    reversed_seed: bool = False

    def reversed(self) -> "OrientationData":
        """The globally reversed orientation (first two entries swapped)."""
        flipped = tuple((t[1], t[0]) + t[2:] for t in self.tuples)
        return OrientationData(flipped, not self.reversed_seed)


def f_vector(k: SimplicialComplex) -> FVector:
    """Face counts per dimension, by enumerating subsets of the facets."""
    d = k.dimension
    faces = [set() for _ in range(d + 1)]
    for f in k.facets:
        verts = sorted(f)
        for size in range(1, d + 2):
            for sub in combinations(verts, size):
                faces[size - 1].add(sub)
    return tuple(len(s) for s in faces)


def h_vector(f: Sequence[int], d: int) -> Tuple[int, ...]:
    """Binomial transform of the f-vector (f_{-1} = 1 implicit)."""
    if len(f) != d:
        raise ValidationError(f"f-vector of length {len(f)} does not match d={d}")
    full = (1,) + tuple(f)  # full[i] = f_{i-1}
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * full[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def euler_characteristic(f: Sequence[int]) -> int:
    return sum((-1) ** i * fi for i, fi in enumerate(f))


def _ridges(k: SimplicialComplex) -> Dict[FrozenSet[int], List[int]]:
    out: Dict[FrozenSet[int], List[int]] = {}
    for idx, f in enumerate(k.facets):
        for v in f:
            out.setdefault(f - {v}, []).append(idx)
    return out


def pseudomanifold_check(
    k: SimplicialComplex,
) -> Tuple[bool, List[Tuple[Tuple[int, ...], int]]]:
    """Every ridge must lie in exactly two facets; returns offenders."""
    offending = []
    for ridge, owners in sorted(_ridges(k).items(), key=lambda kv: sorted(kv[0])):
        if len(owners) != 2:
            offending.append((tuple(sorted(ridge)), len(owners)))
    return (not offending, offending)


def coherent_orientation(k: SimplicialComplex) -> OrientationData:
    """Propagate a coherent orientation across shared ridges by BFS.

    Facet 0 is seeded with its sorted vertex tuple; each facet receives its
    sorted tuple either as-is or with the first two entries swapped.  Raises
    NonOrientableError with a conflicting facet pair as certificate.
    """
    ok, offending = pseudomanifold_check(k)
    if not ok:
        raise ValidationError(f"not a pseudomanifold: ridges {offending}")
    ridges = _ridges(k)
    sorted_facets = [tuple(sorted(f)) for f in k.facets]
    sign: Dict[int, int] = {0: 1}
    queue = [0]
    while queue:
        cur = queue.pop(0)
        fcur = sorted_facets[cur]
        for pos, v in enumerate(fcur):
            ridge = k.facets[cur] - {v}
            owners = ridges[ridge]
            other = owners[0] if owners[1] == cur else owners[1]
            fother = sorted_facets[other]
            opos = fother.index(tuple(sorted(k.facets[other] - ridge))[0])
            # coherence: induced ridge orientations must be opposite
            needed = -sign[cur] * (-1) ** pos * (-1) ** opos
            if other in sign:
                if sign[other] != needed:
                    raise NonOrientableError(cur + 1, other + 1, ridge)
            else:
                sign[other] = needed
                queue.append(other)
    if len(sign) != len(k.facets):
        raise ValidationError("complex is not connected")
    tuples = []
    for idx, f in enumerate(sorted_facets):
        if sign[idx] > 0:
            tuples.append(f)
        else:
            tuples.append((f[1], f[0]) + f[2:])
    return OrientationData(tuple(tuples))


def dualize(k: SimplicialComplex) -> SimplePolytope:
    """Dual simple polytope: facets of k become vertices and vice versa."""
    n = k.dimension + 1
    return SimplePolytope(k.num_vertices, n, k.facets)
