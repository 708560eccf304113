"""Sparse multivariate polynomials over the integers, and identity proofs.

The ring is Z[u1, u2, u3, v1, ..., z3, r]: three indeterminates for each of
the six generic vectors plus a generic scalar r.  A polynomial is a dict
from exponent tuples (one slot per indeterminate) to nonzero int
coefficients.

An identity is proved by building both sides from generic symbolic
vectors with the ordinary vec3 operations, subtracting and checking that
nothing survives.  Integer coefficients make each proof valid in every
commutative ring, hence over every field.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import UnknownIdentity
from .identities import desargues_sides, pappus_sides
from .vec3 import (
    Vec3,
    cross,
    det3,
    det3_scalars,
    dot,
    gram_det,
    quadruple_product,
    scalar_triple,
    vector_triple,
)

VARIABLES = tuple(f"{v}{i}" for v in "uvwxyz" for i in (1, 2, 3)) + ("r",)
NVARS = len(VARIABLES)
EXPONENT_CAP = 255

_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ONE = (0,) * NVARS

Monomial = tuple


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping[Monomial, int], None] = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        e = [0] * NVARS
        e[_INDEX[name]] = 1
        return cls({tuple(e): 1})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({_ONE: c})

    @staticmethod
    def _lift(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return _raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        get = terms.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple([a + b for a, b in zip(m1, m2)])
                terms[m] = get(m, 0) + c1 * c2
        for m in terms:
            if max(m) > EXPONENT_CAP:
                raise OverflowError(f"exponent above {EXPONENT_CAP}")
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        out = MultiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def evaluate(self, values: Union[Mapping[str, object], Sequence], zero=0):
        """Substitute ``values`` (by name, or one per slot) and sum up."""
        if isinstance(values, Mapping):
            vals = [values.get(name) for name in VARIABLES]
        else:
            vals = list(values) + [None] * (NVARS - len(values))
        acc = zero
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    if vals[i] is None:
                        raise KeyError(f"no value for {VARIABLES[i]}")
                    t = t * vals[i] ** e
            acc = acc + t
        return acc

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                VARIABLES[i] if e == 1 else f"{VARIABLES[i]}^{e}"
                for i, e in enumerate(m)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _raw(terms: dict) -> MultiPoly:
    # terms already free of zero coefficients
    p = MultiPoly.__new__(MultiPoly)
    p.terms = terms
    return p


ZERO = MultiPoly()


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_sub(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a - b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_neg(a: MultiPoly) -> MultiPoly:
    return -a


def symbolic_vector(name: str) -> Vec3:
    """The generic vector (name1, name2, name3)."""
    return Vec3(*(MultiPoly.var(f"{name}{i}") for i in (1, 2, 3)))


def sym_cross(a: Vec3, b: Vec3) -> Vec3:
    return cross(a, b)


def sym_det(a: Vec3, b: Vec3, c: Vec3) -> MultiPoly:
    return det3(a, b, c)


# ---------------------------------------------------------------------------
# identity catalog
#
# Each entry maps generic inputs (u, v, w, x, y, z, r) to a list of
# (label, lhs, rhs) equations.  Sides are ring elements or Vec3s; a Vec3
# equation is split into its three components.  The same builders serve the
# symbolic proofs and the numeric property checks.


def _perp_3(u, v, w, x, y, z, r):
    return [
        ("<x*y,x> = 0", dot(cross(x, y), x), 0),
        ("<x*y,y> = 0", dot(cross(x, y), y), 0),
    ]


def _box_5(u, v, w, x, y, z, r):
    return [
        ("<x*y,z> = det(x,y,z)", scalar_triple(x, y, z), det3(x, y, z)),
        ("<x,y*z> = det(x,y,z)", dot(x, cross(y, z)), det3(x, y, z)),
    ]


def _prop_6(u, v, w, x, y, z, r):
    return [("det(x,y,rx) = 0", det3(x, y, x.scale(r)), 0)]


def _cyclic_7(u, v, w, x, y, z, r):
    d = det3(x, y, z)
    return [
        ("det(x,y,z) = det(y,z,x)", d, det3(y, z, x)),
        ("det(x,y,z) = det(z,x,y)", d, det3(z, x, y)),
    ]


def _swap_8(u, v, w, x, y, z, r):
    d = det3(x, y, z)
    return [
        ("det(x,y,z) = -det(y,x,z)", d, -det3(y, x, z)),
        ("det(x,y,z) = -det(x,z,y)", d, -det3(x, z, y)),
        ("det(x,y,z) = -det(z,y,x)", d, -det3(z, y, x)),
    ]


def _transpose_9(u, v, w, x, y, z, r):
    rows = (tuple(x), tuple(y), tuple(z))
    return [("det(x,y,z) = det of rows x,y,z", det3(x, y, z), det3_scalars(rows))]


def _scalar_10(u, v, w, x, y, z, r):
    d = r * det3(x, y, z)
    return [
        ("r det(x,y,z) = det(rx,y,z)", d, det3(x.scale(r), y, z)),
        ("r det(x,y,z) = det(x,ry,z)", d, det3(x, y.scale(r), z)),
        ("r det(x,y,z) = det(x,y,rz)", d, det3(x, y, z.scale(r))),
    ]


def _additive_11(u, v, w, x, y, z, r):
    return [("det(w+x,y,z) = det(w,y,z) + det(x,y,z)", det3(w + x, y, z), det3(w, y, z) + det3(x, y, z))]


def _gram_12(u, v, w, x, y, z, r):
    return [("det(u,v,w) det(x,y,z) = det[<.,.>]", det3(u, v, w) * det3(x, y, z), gram_det((u, v, w), (x, y, z)))]


def _triple_13(u, v, w, x, y, z, r):
    return [("(x*y)*z = <x,z>y - <y,z>x", cross(cross(x, y), z), vector_triple(x, y, z))]


def _quadruple_15(u, v, w, x, y, z, r):
    return [
        ("(w*x)*(y*z) = det(z,w,y)x + det(y,x,z)w", cross(cross(w, x), cross(y, z)), quadruple_product(w, x, y, z))
    ]


def _pappus(u, v, w, x, y, z, r):
    return [("P", *pappus_sides(u, v, w, x, y, z))]


def _desargues(u, v, w, x, y, z, r):
    return [("D", *desargues_sides(u, v, w, x, y, z))]


IDENTITIES: dict[str, Callable] = {
    "P": _pappus,
    "D": _desargues,
    "perp_3": _perp_3,
    "box_5": _box_5,
    "prop_6": _prop_6,
    "cyclic_7": _cyclic_7,
    "swap_8": _swap_8,
    "transpose_9": _transpose_9,
    "scalar_10": _scalar_10,
    "additive_11": _additive_11,
    "gram_12": _gram_12,
    "triple_13": _triple_13,
    "quadruple_15": _quadruple_15,
}

APPENDIX_IDENTITIES = tuple(k for k in IDENTITIES if k not in ("P", "D"))


def identity_equations(name: str, u, v, w, x, y, z, r) -> list[tuple[str, object, object]]:
    """Scalar equations of a catalogued identity; Vec3 sides are split."""
    try:
        builder = IDENTITIES[name]
    except KeyError:
        raise UnknownIdentity(name) from None
    out = []
    for label, lhs, rhs in builder(u, v, w, x, y, z, r):
        if isinstance(lhs, Vec3):
            for i, (a, b) in enumerate(zip(lhs, rhs), 1):
                out.append((f"{label} [{i}]", a, b))
        else:
            out.append((label, lhs, rhs))
    return out


@dataclass
class EquationProof:
    label: str
    lhs_terms: int
    rhs_terms: int
    difference: MultiPoly

    @property
    def is_zero(self) -> bool:
        return self.difference.is_zero()


@dataclass
class ProofReport:
    name: str
    equations: list[EquationProof] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.equations)

    @property
    def difference(self) -> MultiPoly:
        """First nonvanishing difference, or the zero polynomial."""
        for e in self.equations:
            if not e.is_zero:
                return e.difference
        return ZERO

    @property
    def lhs_terms(self) -> int:
        return sum(e.lhs_terms for e in self.equations)

    @property
    def rhs_terms(self) -> int:
        return sum(e.rhs_terms for e in self.equations)

    @property
    def difference_terms(self) -> int:
        return sum(len(e.difference) for e in self.equations)

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "identity": self.name,
            "proved": self.is_zero,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "difference_terms": self.difference_terms,
            "equations": [
                {
                    "label": e.label,
                    "lhs_terms": e.lhs_terms,
                    "rhs_terms": e.rhs_terms,
                    "difference_terms": len(e.difference),
                }
                for e in self.equations
            ],
        }
        if timings:
            d["seconds"] = round(self.seconds, 4)
        return d


def generic_inputs() -> tuple:
    return tuple(symbolic_vector(n) for n in "uvwxyz") + (MultiPoly.var("r"),)


def _as_poly(a) -> MultiPoly:
    return a if isinstance(a, MultiPoly) else MultiPoly.const(a)


def prove_identity(name: str) -> ProofReport:
    if name not in IDENTITIES:
        raise UnknownIdentity(name)
    start = time.perf_counter()
    report = ProofReport(name)
    for label, lhs, rhs in identity_equations(name, *generic_inputs()):
        lhs, rhs = _as_poly(lhs), _as_poly(rhs)
        report.equations.append(EquationProof(label, len(lhs), len(rhs), lhs - rhs))
    report.seconds = time.perf_counter() - start
    return report


def prove_all(names: Iterable[str] = IDENTITIES) -> list[ProofReport]:
    return [prove_identity(n) for n in names]
