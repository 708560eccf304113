"""Vectors in F^3 and the determinant / inner product / cross product toolkit.

Every function here only uses ``+``, ``-`` and ``*`` on the components, so
the same code runs over Fractions, GF(p) elements and symbolic
polynomials alike.  Mixing fields is caught by the element arithmetic
itself, which raises FieldMismatch.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from .errors import ParseError


@dataclass(frozen=True)
class Vec3:
    c1: Any
    c2: Any
    c3: Any

    def __iter__(self) -> Iterator:
        yield self.c1
        yield self.c2
        yield self.c3

    def __getitem__(self, i: int):
        return (self.c1, self.c2, self.c3)[i]

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.c1 - other.c1, self.c2 - other.c2, self.c3 - other.c3)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.c1, -self.c2, -self.c3)

    def scale(self, r) -> "Vec3":
        return Vec3(r * self.c1, r * self.c2, r * self.c3)

    def __rmul__(self, r) -> "Vec3":
        return self.scale(r)

    def is_zero(self) -> bool:
        return self.c1 == 0 and self.c2 == 0 and self.c3 == 0

    def map(self, f) -> "Vec3":
        return Vec3(f(self.c1), f(self.c2), f(self.c3))

    def __str__(self) -> str:
        return f"({self.c1}, {self.c2}, {self.c3})"


def vec(a, b, c, field=None) -> Vec3:
    """Build a Vec3, converting components through ``field`` if given."""
    if field is not None:
        return Vec3(field(a), field(b), field(c))
    return Vec3(a, b, c)


# Scalar kernel.  ``m[i][j]`` is row i, column j; the six terms are the
# expansion printed for det(x, y, z) with x, y, z as the columns.
def det3_scalars(m: Sequence[Sequence]) -> Any:
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = m
    return (
        a11 * a22 * a33
        + a31 * a12 * a23
        + a21 * a32 * a13
        - a11 * a32 * a23
        - a31 * a22 * a13
        - a21 * a12 * a33
    )


def dot(x: Vec3, y: Vec3):
    return x.c1 * y.c1 + x.c2 * y.c2 + x.c3 * y.c3


def cross(x: Vec3, y: Vec3) -> Vec3:
    return Vec3(
        x.c2 * y.c3 - x.c3 * y.c2,
        x.c3 * y.c1 - x.c1 * y.c3,
        x.c1 * y.c2 - x.c2 * y.c1,
    )


def det3(x: Vec3, y: Vec3, z: Vec3):
    """Determinant of the matrix whose columns are x, y, z."""
    return det3_scalars(
        (
            (x.c1, y.c1, z.c1),
            (x.c2, y.c2, z.c2),
            (x.c3, y.c3, z.c3),
        )
    )


def scalar_triple(x: Vec3, y: Vec3, z: Vec3):
    """<x cross y, z>, computed without the determinant kernel."""
    return dot(cross(x, y), z)


def vector_triple(x: Vec3, y: Vec3, z: Vec3) -> Vec3:
    """(x cross y) cross z, by the expansion <x,z> y - <y,z> x."""
    return y.scale(dot(x, z)) - x.scale(dot(y, z))


def quadruple_product(w: Vec3, x: Vec3, y: Vec3, z: Vec3) -> Vec3:
    """(w cross x) cross (y cross z) = det(z,w,y) x + det(y,x,z) w."""
    return x.scale(det3(z, w, y)) + w.scale(det3(y, x, z))


def gram_det(a: Sequence[Vec3], b: Sequence[Vec3]):
    """3x3 determinant of the inner products <a_i, b_j>."""
    return det3_scalars([[dot(ai, bj) for bj in b] for ai in a])


_VEC_RE = re.compile(r"^\s*\(?\s*([^,()]+)\s*,\s*([^,()]+)\s*,\s*([^,()]+)\s*\)?\s*$")


def parse_vec(text: str, field) -> Vec3:
    """Read ``(a, b, c)`` with components in ``field``'s textual syntax."""
    m = _VEC_RE.match(text)
    if not m:
        raise ParseError(f"not a vector: {text!r}")
    return Vec3(*(field.parse(g) for g in m.groups()))


def format_vec(v: Vec3) -> str:
    return str(v)
