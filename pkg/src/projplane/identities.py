"""The two generalized Pappus / Desargues determinant formulas.

Six vectors u, v, w, x, y, z give fifteen joins and six derived
intersection points

    O = (v x z) x (y x w)      R = (v x w) x (y x z)
    P = (w x x) x (z x u)      S = (w x u) x (z x x)
    Q = (u x y) x (x x v)      T = (u x v) x (x x y)

and two identities hold for every choice of vectors over every field:

    det(Q, P, O) = [vux][uwz][wvy][yxz] + [xyv][zxu][yzw][uwv]
    det(S, T, R) = [xyz] det(u x x, v x y, w x z) [uvw]

where [abc] = det(a, b, c).  Pappus and Desargues are the special cases
where some of the bracket factors vanish.

``pappus_sides`` and ``desargues_sides`` are written against the generic
vec3 operations, so the symbolic prover expands exactly the expressions
that the numeric checks evaluate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any

from .errors import DegenerateConfiguration, FieldMismatch, ZeroVector
from .fields import PrimeFieldElement
from .vec3 import Vec3, cross, det3

LABELS = ("u", "v", "w", "x", "y", "z")


def _cc(a: Vec3, b: Vec3, c: Vec3, d: Vec3) -> Vec3:
    return cross(cross(a, b), cross(c, d))


def pappus_sides(u, v, w, x, y, z) -> tuple[Any, Any]:
    q = _cc(u, y, x, v)
    p = _cc(w, x, z, u)
    o = _cc(v, z, y, w)
    lhs = det3(q, p, o)
    rhs = (
        det3(v, u, x) * det3(u, w, z) * det3(w, v, y) * det3(y, x, z)
        + det3(x, y, v) * det3(z, x, u) * det3(y, z, w) * det3(u, w, v)
    )
    return lhs, rhs


def desargues_sides(u, v, w, x, y, z) -> tuple[Any, Any]:
    s = _cc(w, u, z, x)
    t = _cc(u, v, x, y)
    r = _cc(v, w, y, z)
    lhs = det3(s, t, r)
    rhs = det3(x, y, z) * det3(cross(u, x), cross(v, y), cross(w, z)) * det3(u, v, w)
    return lhs, rhs


@dataclass(frozen=True)
class Configuration:
    """Six nonzero homogeneous coordinate vectors over one field."""

    u: Vec3
    v: Vec3
    w: Vec3
    x: Vec3
    y: Vec3
    z: Vec3

    def __post_init__(self):
        moduli = set()
        for label in LABELS:
            vec = getattr(self, label)
            if vec.is_zero():
                raise ZeroVector(f"configuration vector {label} is zero")
            for c in vec:
                moduli.add(c.field.p if isinstance(c, PrimeFieldElement) else 0)
        if len(moduli) > 1:
            raise FieldMismatch("configuration vectors come from different fields")

    def vectors(self) -> tuple[Vec3, ...]:
        return (self.u, self.v, self.w, self.x, self.y, self.z)

    def items(self):
        return zip(LABELS, self.vectors())

    def scaled(self, label: str, r) -> "Configuration":
        vs = dict(self.items())
        vs[label] = vs[label].scale(r)
        return Configuration(**vs)


@dataclass(frozen=True)
class DerivedPoints:
    o: Vec3
    p: Vec3
    q: Vec3
    r: Vec3
    s: Vec3
    t: Vec3

    def items(self):
        return (
            ("O", self.o),
            ("P", self.p),
            ("Q", self.q),
            ("R", self.r),
            ("S", self.s),
            ("T", self.t),
        )


@dataclass(frozen=True)
class IdentityReport:
    lhs: Any
    rhs: Any

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def derive_points(c: Configuration) -> DerivedPoints:
    u, v, w, x, y, z = c.vectors()
    return DerivedPoints(
        o=_cc(v, z, y, w),
        p=_cc(w, x, z, u),
        q=_cc(u, y, x, v),
        r=_cc(v, w, y, z),
        s=_cc(w, u, z, x),
        t=_cc(u, v, x, y),
    )


def pairwise_joins(c: Configuration) -> dict[str, Vec3]:
    """The fifteen lines through pairs of the six points, as raw cross products."""
    return {
        (a + b).upper(): cross(va, vb)
        for (a, va), (b, vb) in combinations(list(c.items()), 2)
    }


def eval_P(c: Configuration) -> IdentityReport:
    return IdentityReport(*pappus_sides(*c.vectors()))


def eval_D(c: Configuration) -> IdentityReport:
    return IdentityReport(*desargues_sides(*c.vectors()))


@dataclass(frozen=True)
class PappusVerdict:
    hypothesis_holds: bool
    conclusion_holds: bool
    degenerate: bool

    @property
    def consistent(self) -> bool:
        return self.conclusion_holds or not self.hypothesis_holds


@dataclass(frozen=True)
class DesarguesVerdict:
    triangles_ok: bool
    concurrent_1st: bool
    collinear_2nd: bool
    degenerate: bool

    @property
    def consistent(self) -> bool:
        if self.concurrent_1st and not self.collinear_2nd:
            return False
        if self.triangles_ok:
            return self.concurrent_1st == self.collinear_2nd
        return True


def pappus_degenerate(c: Configuration) -> bool:
    """True when one of O, P, Q or the six lines defining them is undefined."""
    u, v, w, x, y, z = c.vectors()
    lines = [cross(v, z), cross(y, w), cross(w, x), cross(z, u), cross(u, y), cross(x, v)]
    if any(l.is_zero() for l in lines):
        return True
    d = derive_points(c)
    return d.o.is_zero() or d.p.is_zero() or d.q.is_zero()


def desargues_degenerate(c: Configuration) -> bool:
    """True when one of R, S, T, the lines defining them, or U+X, V+Y, W+Z is undefined."""
    u, v, w, x, y, z = c.vectors()
    lines = [
        cross(u, x), cross(v, y), cross(w, z),
        cross(v, w), cross(y, z), cross(w, u),
        cross(z, x), cross(u, v), cross(x, y),
    ]
    if any(l.is_zero() for l in lines):
        return True
    d = derive_points(c)
    return d.r.is_zero() or d.s.is_zero() or d.t.is_zero()


def check_pappus(c: Configuration, strict: bool = False) -> PappusVerdict:
    """Pappus verdict; with ``strict`` a degenerate configuration raises."""
    degenerate = pappus_degenerate(c)
    if degenerate and strict:
        raise DegenerateConfiguration("O, P or Q is not a well-defined point")
    u, v, w, x, y, z = c.vectors()
    d = derive_points(c)
    return PappusVerdict(
        hypothesis_holds=det3(u, v, w) == 0 and det3(x, y, z) == 0,
        conclusion_holds=det3(d.q, d.p, d.o) == 0,
        degenerate=degenerate,
    )


def check_desargues(c: Configuration) -> DesarguesVerdict:
    u, v, w, x, y, z = c.vectors()
    d = derive_points(c)
    return DesarguesVerdict(
        triangles_ok=det3(u, v, w) != 0 and det3(x, y, z) != 0,
        concurrent_1st=det3(cross(u, x), cross(v, y), cross(w, z)) == 0,
        collinear_2nd=det3(d.s, d.t, d.r) == 0,
        degenerate=desargues_degenerate(c),
    )


def four_triples(c: Configuration) -> tuple[Any, Any, Any, Any]:
    """Determinants of O,P,Q and of the three alternate Pappus triples.

    O,P,Q enter in the order Q, P, O (the left side of the Pappus formula);
    each alternate triple is taken in its listed order.  All four agree.
    """
    u, v, w, x, y, z = c.vectors()
    d = derive_points(c)
    return (
        det3(d.q, d.p, d.o),
        det3(_cc(z, v, u, w), _cc(y, u, x, z), _cc(w, x, v, y)),
        det3(_cc(y, u, w, v), _cc(x, w, z, y), _cc(v, z, u, x)),
        det3(_cc(z, w, v, x), _cc(u, v, y, z), _cc(x, y, w, u)),
    )


def random_configuration(field, rng, bound: int = 10) -> Configuration:
    """Six independent uniform nonzero vectors (zero draws are redrawn)."""
    vs = []
    while len(vs) < 6:
        v = Vec3(*(field.random(rng, bound) for _ in range(3)))
        if not v.is_zero():
            vs.append(v)
    return Configuration(*vs)
