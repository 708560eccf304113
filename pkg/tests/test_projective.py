import itertools
import random

import pytest

from projplane.errors import CoincidentLines, CoincidentPoints, ZeroVector
from projplane.fields import RATIONAL, make_prime_field
from projplane.projective import (
    ProjLine,
    ProjPoint,
    collinear,
    concurrent,
    incident,
    join,
    line_from,
    meet,
    point_from,
)
from projplane.vec3 import cross, vec

from conftest import rand_nonzero_scalar, rand_vec

Q = RATIONAL


def P(*c, F=Q):
    return point_from(vec(*c, field=F))


def L(*c, F=Q):
    return line_from(vec(*c, field=F))


def test_point_from_examples():
    assert P(2, 4, 6).rep == vec(1, 2, 3, Q)
    assert P(0, 0, 5).rep == vec(0, 0, 1, Q)
    F7 = make_prime_field(7)
    # inv(3) = 5 in GF(7): (0, 15, 30) = (0, 1, 2)
    assert P(0, 3, 6, F=F7).rep == vec(0, 1, 2, F7)
    with pytest.raises(ZeroVector):
        P(0, 0, 0)


def test_line_from_examples():
    assert L(0, 0, 2).rep == vec(0, 0, 1, Q)
    assert L(3, 0, 0).rep == vec(1, 0, 0, Q)
    F5 = make_prime_field(5)
    assert L(0, 2, 4, F=F5).rep == vec(0, 1, 2, F5)


def test_join_examples():
    assert join(P(1, 0, 0), P(0, 1, 0)) == L(0, 0, 1)
    A = P(1, 1, 1)
    with pytest.raises(CoincidentPoints):
        join(A, A)
    with pytest.raises(CoincidentPoints):
        join(P(1, 2, 3), P(-2, -4, -6))
    assert cross(vec(1, 1, 1, Q), vec(1, 2, 3, Q)) == vec(1, -2, 1, Q)
    assert join(A, P(1, 2, 3)) == L(1, -2, 1)


def test_meet_examples(field, rng):
    assert meet(L(1, 0, 0), L(0, 1, 0)) == P(0, 0, 1)
    l = L(1, 2, 3)
    with pytest.raises(CoincidentLines):
        meet(l, l)
    for _ in range(100):
        A, B, C = (point_from(rand_vec(field, rng, nonzero=True)) for _ in range(3))
        if collinear(A, B, C):
            continue
        X = meet(join(A, B), join(A, C))
        assert X == A
        assert incident(X, join(A, B)) and incident(X, join(A, C))


def test_incident_examples(field, rng):
    assert incident(P(1, 0, 0), L(0, 0, 1))
    assert not incident(P(1, 0, 0), L(1, 0, 0))
    for _ in range(200):
        A, B = (point_from(rand_vec(field, rng, nonzero=True)) for _ in range(2))
        if A == B:
            continue
        assert incident(A, join(A, B)) and incident(B, join(A, B))


def test_collinear_examples(field, rng):
    assert collinear(P(1, 0, 0), P(0, 1, 0), P(1, 1, 0))
    assert not collinear(P(1, 0, 0), P(0, 1, 0), P(0, 0, 1))
    for _ in range(100):
        A, B = (point_from(rand_vec(field, rng, nonzero=True)) for _ in range(2))
        m = line_from(rand_vec(field, rng, nonzero=True))
        if A == B or join(A, B) == m:
            continue
        assert collinear(A, B, meet(join(A, B), m))


def test_concurrent_mirrors_collinear(field, rng):
    assert concurrent(L(1, 0, 0), L(0, 1, 0), L(1, 1, 0))
    assert not concurrent(L(1, 0, 0), L(0, 1, 0), L(0, 0, 1))
    for _ in range(200):
        vs = [rand_vec(field, rng, nonzero=True) for _ in range(3)]
        pts = [point_from(v) for v in vs]
        lns = [line_from(v) for v in vs]
        assert collinear(*pts) == concurrent(*lns)


def test_scale_invariance(field, rng):
    for _ in range(300):
        v = rand_vec(field, rng, nonzero=True)
        r = rand_nonzero_scalar(field, rng)
        assert point_from(v.scale(r)) == point_from(v)
        rep = point_from(v).rep
        assert next(c for c in rep if c != 0) == 1


def test_meet_of_lines_is_on_both(field, rng):
    for _ in range(200):
        l, m = (line_from(rand_vec(field, rng, nonzero=True)) for _ in range(2))
        if l == m:
            continue
        X = meet(l, m)
        assert incident(X, l) and incident(X, m)


def test_collinear_permutation_and_rescaling(field):
    rng = random.Random(3)
    for _ in range(100):
        vs = [rand_vec(field, rng, nonzero=True) for _ in range(3)]
        if rng.random() < 0.5:  # force collinear half the time
            vs[2] = vs[0].scale(field.random(rng)) + vs[1].scale(field.random(rng))
            if vs[2].is_zero():
                continue
        pts = [ProjPoint(v) for v in vs]
        expected = collinear(*pts)
        for perm in itertools.permutations(pts):
            assert collinear(*perm) == expected
        scaled = [ProjPoint(v.scale(rand_nonzero_scalar(field, rng))) for v in vs]
        assert collinear(*scaled) == expected


def test_textual_forms():
    assert str(P(2, 4, 6)) == "point(1,2,3)"
    assert str(L(0, 3, 1)) == "line(0,1,1/3)"
    F = make_prime_field(7)
    assert str(L(0, 3, 1, F=F)) == "line(0,1,5)"
    assert isinstance(L(1, 2, 3), ProjLine)
