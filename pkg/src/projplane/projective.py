"""Points and lines of the projective plane over a field.

A point or line is stored as the canonical representative of its
homogeneous coordinates: the scalar multiple whose first nonzero component
is 1.  Projective equality is then plain value equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CoincidentLines, CoincidentPoints, ZeroVector
from .fields import field_inv
from .vec3 import Vec3, cross, det3, dot


def canonical(v: Vec3) -> Vec3:
    for c in v:
        if c != 0:
            return v.scale(field_inv(c))
    raise ZeroVector("the zero vector has no projective class")


@dataclass(frozen=True)
class ProjPoint:
    rep: Vec3

    def __str__(self) -> str:
        return "point({},{},{})".format(*self.rep)


@dataclass(frozen=True)
class ProjLine:
    rep: Vec3

    def __str__(self) -> str:
        return "line({},{},{})".format(*self.rep)


def point_from(v: Vec3) -> ProjPoint:
    return ProjPoint(canonical(v))


def line_from(v: Vec3) -> ProjLine:
    return ProjLine(canonical(v))


def join(P: ProjPoint, Q: ProjPoint) -> ProjLine:
    c = cross(P.rep, Q.rep)
    if c.is_zero():
        raise CoincidentPoints(f"{P} and {Q} coincide")
    return line_from(c)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    c = cross(l.rep, m.rep)
    if c.is_zero():
        raise CoincidentLines(f"{l} and {m} coincide")
    return point_from(c)


def incident(P: ProjPoint, l: ProjLine) -> bool:
    return dot(P.rep, l.rep) == 0


def collinear(P: ProjPoint, Q: ProjPoint, R: ProjPoint) -> bool:
    return det3(P.rep, Q.rep, R.rep) == 0


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    return det3(l.rep, m.rep, n.rep) == 0
