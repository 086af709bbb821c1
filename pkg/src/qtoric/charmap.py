"""Characteristic maps, vertex signs, and the omniorientation flip solver.

The same engine serves simple polytopes (vectors on facets, signs at
vertices) and simplicial spheres (vectors on sphere vertices, signs at
maximal simplices): in both cases there is a list of "cells", each a set of
vector carriers, together with a positively ordered tuple per cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple, Union

from .complexes import OrientationData, SimplePolytope, SimplicialComplex
from .errors import CoverageError, UnimodularityError, ValidationError
from .exactnum import Gf2System, det_int, is_primitive

Structure = Union[SimplePolytope, SimplicialComplex]
SignPattern = Tuple[int, ...]
FlipVector = Tuple[int, ...]


@dataclass(frozen=True)
class CharacteristicMap:
    """Primitive integer n-vectors indexed by facet (or sphere-vertex) label.

    vectors[i-1] is the vector attached to label i.
    """

    rank: int
    vectors: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for i, v in enumerate(self.vectors, start=1):
            if len(v) != self.rank:
                raise ValidationError(
                    f"vector {i} has dimension {len(v)}, expected {self.rank}"
                )
            if not is_primitive(v):
                raise ValidationError(f"vector {i} = {v} is not primitive")

    @classmethod
    def of(cls, rank: int, vectors: Iterable[Sequence[int]]):
        return cls(rank, tuple(tuple(int(x) for x in v) for v in vectors))

    def vector(self, label: int) -> Tuple[int, ...]:
        return self.vectors[label - 1]

    @property
    def num_carriers(self) -> int:
        return len(self.vectors)


def cells_of(structure: Structure) -> Tuple[FrozenSet[int], ...]:
    """Sign-carrying cells: polytope vertices, or sphere maximal simplices."""
    if isinstance(structure, SimplePolytope):
        return structure.vertices
    if isinstance(structure, SimplicialComplex):
        return structure.facets
    raise TypeError(f"unsupported structure {type(structure).__name__}")


def num_carriers_of(structure: Structure) -> int:
    if isinstance(structure, SimplePolytope):
        return structure.num_facets
    return structure.num_vertices


def cell_label(cell: Iterable[int]) -> str:
    return "".join(str(i) for i in sorted(cell))


def _check_coverage(structure: Structure, cm: CharacteristicMap) -> None:
    m = num_carriers_of(structure)
    if cm.num_carriers != m:
        raise CoverageError(
            f"map assigns {cm.num_carriers} vectors but the structure has {m} carriers"
        )


def _cell_det(cm: CharacteristicMap, ordered: Sequence[int]) -> int:
    cols = [cm.vector(i) for i in ordered]
    return det_int([[cols[j][i] for j in range(len(cols))] for i in range(len(cols))])


def unimodularity_check(
    structure: Structure, cm: CharacteristicMap
) -> Tuple[bool, List[Tuple[str, int]]]:
    """|det| = 1 at every cell; returns (pass, offenders with their det)."""
    _check_coverage(structure, cm)
    offenders = []
    for cell in cells_of(structure):
        d = _cell_det(cm, sorted(cell))
        if abs(d) != 1:
            offenders.append((cell_label(cell), d))
    return (not offenders, offenders)


def vertex_sign(cm: CharacteristicMap, ordered: Sequence[int]) -> int:
    """Sign of one cell: det of the vectors in positively ordered column order."""
    d = _cell_det(cm, ordered)
    if abs(d) != 1:
        raise UnimodularityError(
            f"cell {tuple(ordered)} has det {d}, not a unimodular minor"
        )
    return d


def _check_orientation(structure: Structure, orientation: OrientationData) -> None:
    cells = cells_of(structure)
    if len(orientation.tuples) != len(cells):
        raise ValidationError("orientation data does not match the cell list")
    for t, cell in zip(orientation.tuples, cells):
        if frozenset(t) != cell:
            raise ValidationError(
                f"orientation tuple {t} is not a permutation of cell {sorted(cell)}"
            )


def sign_pattern(
    structure: Structure, cm: CharacteristicMap, orientation: OrientationData
) -> SignPattern:
    """Per-cell signs, in the orientation's cell order."""
    _check_coverage(structure, cm)
    _check_orientation(structure, orientation)
    return tuple(vertex_sign(cm, t) for t in orientation.tuples)


def almost_complex_check(
    structure: Structure, cm: CharacteristicMap, orientation: OrientationData
) -> Tuple[bool, List[str]]:
    """True iff every sign is +1; offenders are reported by label."""
    signs = sign_pattern(structure, cm, orientation)
    offenders = [
        cell_label(t)
        for t, s in zip(orientation.tuples, signs)
        if s == -1
    ]
    return (not offenders, offenders)


def flip_system(
    structure: Structure, cm: CharacteristicMap, orientation: OrientationData
) -> Gf2System:
    """GF(2) system whose solutions are the sign flips making all signs +1.

    Negating vector i negates every det it enters, so a flip x turns
    sigma(v) into sigma(v) * prod_{i in v} x_i; over GF(2) that is one
    equation per cell with right-hand side 1 exactly when sigma(v) = -1.
    """
    signs = sign_pattern(structure, cm, orientation)
    equations = [
        (frozenset(t), 1 if s == -1 else 0)
        for t, s in zip(orientation.tuples, signs)
    ]
    return Gf2System.of(num_carriers_of(structure), equations)


def apply_flip(cm: CharacteristicMap, flip: Sequence[int]) -> CharacteristicMap:
    """Replace vector i by flip[i-1] * vector i, flip entries in {-1, +1}."""
    if len(flip) != cm.num_carriers:
        raise ValidationError("flip vector length does not match the map")
    if any(x not in (-1, 1) for x in flip):
        raise ValidationError("flip entries must be -1 or +1")
    return CharacteristicMap(
        cm.rank,
        tuple(
            tuple(x * f for x in v) for v, f in zip(cm.vectors, flip)
        ),
    )


def flip_from_bits(bits: Sequence[int]) -> FlipVector:
    """Convert a GF(2) solution (1 = flip) into a {-1,+1} flip vector."""
    return tuple(-1 if b else 1 for b in bits)
