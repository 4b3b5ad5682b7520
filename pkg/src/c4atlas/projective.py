"""Points of the projective plane PG(2,q) and the orthogonality predicate.

A point is an equivalence class of nonzero vectors in GF(q)^3 under
scaling; the canonical representative has its first nonzero coordinate
equal to 1.  Point order is lexicographic on the integer-encoded
coordinate triple, which fixes vertex numbering downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldElement, FieldSpec


class ZeroVector(ValueError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[FieldElement, FieldElement, FieldElement]

    def __repr__(self) -> str:
        return f"ProjPoint{self.coords}"


def normalize(spec: FieldSpec, v: tuple[FieldElement, ...]) -> ProjPoint:
    """Canonical representative of the class of v; idempotent."""
    if len(v) != 3:
        raise ValueError("projective points live in GF(q)^3")
    coords = tuple(spec.check(c) for c in v)
    zero = spec.zero
    pivot = next((c for c in coords if c != zero), None)
    if pivot is None:
        raise ZeroVector("cannot normalize the zero vector")
    if pivot == spec.one:
        return ProjPoint(coords)
    scale = spec.inv(pivot)
    return ProjPoint(tuple(spec.mul(scale, c) for c in coords))


def enumerate_points(spec: FieldSpec) -> list[ProjPoint]:
    """All q^2+q+1 canonical points, lexicographic by encoded coordinates."""
    zero, one = spec.zero, spec.one
    points = [ProjPoint((zero, zero, one))]
    for z in spec.elements():
        points.append(ProjPoint((zero, one, z)))
    for y in spec.elements():
        for z in spec.elements():
            points.append(ProjPoint((one, y, z)))
    return points


def incidence(spec: FieldSpec, x: ProjPoint, y: ProjPoint) -> bool:
    """True iff x1*y1 + x2*y2 + x3*y3 = 0; invariant under rescaling."""
    acc = spec.zero
    for a, b in zip(x.coords, y.coords):
        acc = spec.add(acc, spec.mul(a, b))
    return acc == spec.zero


def is_quadric(spec: FieldSpec, x: ProjPoint) -> bool:
    """Self-orthogonal points; exactly q+1 of them in PG(2,q)."""
    return incidence(spec, x, x)
