"""Finite projective planes PG(2, q) for prime q, and theorem sweeps.

The catalog is built from canonical representatives (1,a,b), (0,1,c),
(0,0,1) and its combinatorial invariants are checked by counting, not
assumed.  Sweeps run the Pappus and Desargues checks over many
configurations at once with a vectorized integer kernel: residues live in
integer arrays wide enough for a*b - c*d, and every product is reduced
mod q before the next one, so nothing overflows for moduli below 2**31.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import CapExceeded, NotPrime
from .fields import is_prime, make_prime_field
from .projective import ProjLine, ProjPoint, join, meet
from .vec3 import Vec3

DEFAULT_CAP = 13
EXHAUSTIVE_MAX_Q = 3
CHUNK = 1 << 17


@dataclass
class PlaneCatalog:
    q: int
    points: list[ProjPoint]
    lines: list[ProjLine]
    incidence: np.ndarray  # incidence[i, j]: point i on line j
    coords: np.ndarray  # (N, 3) canonical residues, shared by points and lines

    @property
    def size(self) -> int:
        return len(self.points)

    def point_index(self, P: ProjPoint) -> int:
        return self._index[tuple(int(c) for c in P.rep)]

    def line_index(self, l: ProjLine) -> int:
        return self._index[tuple(int(c) for c in l.rep)]

    def __post_init__(self):
        self._index = {tuple(int(c) for c in row): i for i, row in enumerate(self.coords)}

    def invariants(self) -> dict[str, bool]:
        q, I = self.q, self.incidence.astype(np.int64)
        n = q * q + q + 1
        off = ~np.eye(len(self.points), dtype=bool)
        return {
            "point_count": len(self.points) == n,
            "line_count": len(self.lines) == n,
            "points_per_line": bool(np.all(I.sum(axis=0) == q + 1)),
            "lines_per_point": bool(np.all(I.sum(axis=1) == q + 1)),
            "unique_join": bool(np.all((I @ I.T)[off] == 1)),
            "unique_meet": bool(np.all((I.T @ I)[off] == 1)),
        }


def join_meet_agree(cat: PlaneCatalog) -> bool:
    """Every pairwise join and meet matches the unique common line / point
    read off the incidence matrix."""
    I = cat.incidence
    for i in range(cat.size):
        for j in range(i + 1, cat.size):
            common = np.flatnonzero(I[i] & I[j])
            if len(common) != 1 or cat.line_index(join(cat.points[i], cat.points[j])) != common[0]:
                return False
            common = np.flatnonzero(I[:, i] & I[:, j])
            if len(common) != 1 or cat.point_index(meet(cat.lines[i], cat.lines[j])) != common[0]:
                return False
    return True


def canonical_residues(q: int) -> np.ndarray:
    reps = [(1, a, b) for a in range(q) for b in range(q)]
    reps += [(0, 1, c) for c in range(q)]
    reps.append((0, 0, 1))
    return np.array(reps, dtype=np.int64)


def enumerate_plane(q: int, cap: int = DEFAULT_CAP) -> PlaneCatalog:
    if not isinstance(q, int) or not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q > cap:
        raise CapExceeded(f"q = {q} exceeds the cap {cap}")
    F = make_prime_field(q)
    coords = canonical_residues(q)
    vecs = [Vec3(*(F(int(c)) for c in row)) for row in coords]
    incidence = (coords @ coords.T) % q == 0
    return PlaneCatalog(
        q=q,
        points=[ProjPoint(v) for v in vecs],
        lines=[ProjLine(v) for v in vecs],
        incidence=incidence,
        coords=coords,
    )


# ---------------------------------------------------------------------------
# vectorized kernel
#
# A batch of vectors is a tuple of three 1-D residue arrays.  Every product
# is reduced mod p before it meets another factor.


def kernel_dtype(p: int):
    # a*b - c*d must fit: 2 p^2 < 2^31
    return np.int32 if 2 * p * p < 2**31 else np.int64


def _cross(a, b, p):
    a1, a2, a3 = a
    b1, b2, b3 = b
    return (
        (a2 * b3 - a3 * b2) % p,
        (a3 * b1 - a1 * b3) % p,
        (a1 * b2 - a2 * b1) % p,
    )


def _dot(a, b, p):
    return ((a[0] * b[0]) % p + (a[1] * b[1]) % p + (a[2] * b[2]) % p) % p


def _det(x, y, z, p):
    return _dot(_cross(x, y, p), z, p)


def _mul(p, *fs):
    out = fs[0]
    for f in fs[1:]:
        out = out * f % p
    return out


def _zero(a):
    return (a[0] == 0) & (a[1] == 0) & (a[2] == 0)


def _columns(rows: np.ndarray, p: int):
    rows = rows.astype(kernel_dtype(p), copy=False)
    return (np.ascontiguousarray(rows[:, 0]), np.ascontiguousarray(rows[:, 1]), np.ascontiguousarray(rows[:, 2]))


def evaluate_batch(u, v, w, x, y, z, p: int) -> dict[str, np.ndarray]:
    """Both formulas and every theorem predicate for a batch of configurations.

    Inputs are (B, 3) residue arrays; outputs are (B,) arrays.
    """
    u, v, w, x, y, z = (_columns(a, p) for a in (u, v, w, x, y, z))
    vz, yw, wx, zu, uy, xv = (
        _cross(v, z, p), _cross(y, w, p), _cross(w, x, p),
        _cross(z, u, p), _cross(u, y, p), _cross(x, v, p),
    )
    vw, yz, wu, zx, uv, xy = (
        _cross(v, w, p), _cross(y, z, p), _cross(w, u, p),
        _cross(z, x, p), _cross(u, v, p), _cross(x, y, p),
    )
    ux, vy, wz = _cross(u, x, p), _cross(v, y, p), _cross(w, z, p)
    o, pp, q = _cross(vz, yw, p), _cross(wx, zu, p), _cross(uy, xv, p)
    r, s, t = _cross(vw, yz, p), _cross(wu, zx, p), _cross(uv, xy, p)

    # det(a, b, c) = <a x b, c>; reuse the joins already computed
    d_uvw, d_xyz = _dot(uv, w, p), _dot(xy, z, p)
    lhs_p = _det(q, pp, o, p)
    rhs_p = (
        _mul(p, (p - _dot(uv, x, p)) % p, (p - _dot(wu, z, p)) % p, (p - _dot(vw, y, p)) % p, (p - d_xyz) % p)
        + _mul(p, _dot(xy, v, p), _dot(zx, u, p), _dot(yz, w, p), (p - d_uvw) % p)
    ) % p
    first = _det(ux, vy, wz, p)
    lhs_d = _det(s, t, r, p)
    rhs_d = _mul(p, d_xyz, first, d_uvw)

    pap_deg = _zero(vz)
    for a in (yw, wx, zu, uy, xv, o, pp, q):
        pap_deg |= _zero(a)
    des_deg = _zero(ux)
    for a in (vy, wz, vw, yz, wu, zx, uv, xy, r, s, t):
        des_deg |= _zero(a)

    return {
        "identity_P": lhs_p == rhs_p,
        "identity_D": lhs_d == rhs_d,
        "uvw_collinear": d_uvw == 0,
        "xyz_collinear": d_xyz == 0,
        "opq_collinear": lhs_p == 0,
        "concurrent_1st": first == 0,
        "collinear_2nd": lhs_d == 0,
        "pappus_degenerate": pap_deg,
        "desargues_degenerate": des_deg,
    }


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class PappusStats:
    q: int
    mode: str
    total: int = 0
    degenerate: int = 0
    tested: int = 0
    passed: int = 0
    identity_failures: int = 0

    @property
    def failures(self) -> int:
        return self.tested - self.passed

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.identity_failures == 0

    def merge(self, other: "PappusStats") -> None:
        for k in ("total", "degenerate", "tested", "passed", "identity_failures"):
            setattr(self, k, getattr(self, k) + getattr(other, k))

    def to_dict(self) -> dict:
        return {**asdict(self), "failures": self.failures, "ok": self.ok}


@dataclass
class DesarguesStats:
    """Counts over all configurations.

    ``both_true``, ``both_false``, ``forward_only`` (collinear R,S,T without
    concurrent U+X, V+Y, W+Z) and ``implication_failures`` partition
    ``total``.
    """

    q: int
    mode: str
    total: int = 0
    degenerate: int = 0
    triangles_ok: int = 0
    both_true: int = 0
    both_false: int = 0
    forward_only: int = 0
    implication_failures: int = 0
    biconditional_failures: int = 0
    identity_failures: int = 0

    @property
    def ok(self) -> bool:
        return (
            self.implication_failures == 0
            and self.biconditional_failures == 0
            and self.identity_failures == 0
        )

    def merge(self, other: "DesarguesStats") -> None:
        for k in (
            "total", "degenerate", "triangles_ok", "both_true", "both_false",
            "forward_only", "implication_failures", "biconditional_failures",
            "identity_failures",
        ):
            setattr(self, k, getattr(self, k) + getattr(other, k))

    def to_dict(self) -> dict:
        return {**asdict(self), "ok": self.ok}


def collinear_triples(cat: PlaneCatalog) -> np.ndarray:
    """All ordered point-index triples (i, j, k) that are collinear."""
    n, p, C = cat.size, cat.q, cat.coords
    out = []
    ij = np.indices((n, n)).reshape(2, -1).T
    for k in range(n):
        d = _det(_columns(C[ij[:, 0]], p), _columns(C[ij[:, 1]], p), _columns(C[[k]], p), p)
        sel = ij[d == 0]
        out.append(np.column_stack([sel, np.full(len(sel), k)]))
    return np.concatenate(out)


def _chunks(total: int) -> Iterator[tuple[int, int]]:
    for start in range(0, total, CHUNK):
        yield start, min(start + CHUNK, total)


def _pappus_chunk(cat, triples, first, second) -> PappusStats:
    C, p = cat.coords, cat.q
    a, b = triples[first], triples[second]
    res = evaluate_batch(C[a[:, 0]], C[a[:, 1]], C[a[:, 2]], C[b[:, 0]], C[b[:, 1]], C[b[:, 2]], p)
    good = ~res["pappus_degenerate"]
    s = PappusStats(q=p, mode="")
    s.total = len(a)
    s.degenerate = int((~good).sum())
    s.tested = int(good.sum())
    # hypothesis holds by construction; the mask re-checks it
    hyp = res["uvw_collinear"] & res["xyz_collinear"]
    s.passed = int((good & hyp & res["opq_collinear"]).sum())
    s.identity_failures = int((~res["identity_P"]).sum() + (~res["identity_D"]).sum())
    return s


def _desargues_chunk(cat, idx) -> DesarguesStats:
    C, p = cat.coords, cat.q
    res = evaluate_batch(*(C[idx[:, i]] for i in range(6)), p)
    first, second = res["concurrent_1st"], res["collinear_2nd"]
    tri = ~res["uvw_collinear"] & ~res["xyz_collinear"]
    s = DesarguesStats(q=p, mode="")
    s.total = len(idx)
    s.degenerate = int(res["desargues_degenerate"].sum())
    s.triangles_ok = int(tri.sum())
    s.both_true = int((first & second).sum())
    s.both_false = int((~first & ~second).sum())
    s.forward_only = int((~first & second).sum())
    s.implication_failures = int((first & ~second).sum())
    s.biconditional_failures = int((tri & (first != second)).sum())
    s.identity_failures = int((~res["identity_P"]).sum() + (~res["identity_D"]).sum())
    return s


def _run(jobs, merge_into, workers: int):
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            results = list(ex.map(lambda f: f(), jobs))
    else:
        results = [f() for f in jobs]
    for r in results:
        merge_into.merge(r)
    return merge_into


def _resolve_mode(q: int, n: Optional[int], exhaustive: Optional[bool]) -> bool:
    if exhaustive is None:
        exhaustive = n is None and q <= EXHAUSTIVE_MAX_Q
    if exhaustive and q > EXHAUSTIVE_MAX_Q:
        raise CapExceeded(f"exhaustive sweeps are limited to q <= {EXHAUSTIVE_MAX_Q}")
    return exhaustive


def sweep_pappus(
    q: int,
    n: Optional[int] = None,
    seed: int = 0,
    exhaustive: Optional[bool] = None,
    workers: int = 1,
    catalog: Optional[PlaneCatalog] = None,
) -> PappusStats:
    """Pappus over configurations with both point triples collinear.

    Exhaustive (every ordered pair of collinear ordered triples) when
    ``exhaustive`` or when q <= 3 and no sample count is given; otherwise
    ``n`` uniform samples (default 10**4) drawn with ``seed``.
    """
    cat = catalog or enumerate_plane(q)
    triples = collinear_triples(cat)
    m = len(triples)
    exhaustive = _resolve_mode(q, n, exhaustive)
    jobs = []
    if exhaustive:
        stats = PappusStats(q=q, mode="exhaustive")
        for lo, hi in _chunks(m * m):
            flat = np.arange(lo, hi)
            jobs.append(lambda f=flat: _pappus_chunk(cat, triples, f // m, f % m))
    else:
        n = 10_000 if n is None else n
        stats = PappusStats(q=q, mode=f"sampled:{n}:seed={seed}")
        picks = np.random.default_rng(seed % 2**64).integers(0, m, size=(n, 2))
        for lo, hi in _chunks(n):
            jobs.append(lambda a=picks[lo:hi]: _pappus_chunk(cat, triples, a[:, 0], a[:, 1]))
    return _run(jobs, stats, workers)


def sweep_desargues(
    q: int,
    n: Optional[int] = None,
    seed: int = 0,
    exhaustive: Optional[bool] = None,
    workers: int = 1,
    catalog: Optional[PlaneCatalog] = None,
) -> DesarguesStats:
    """Desargues over ordered 6-tuples of points (all of them, or ``n`` samples)."""
    cat = catalog or enumerate_plane(q)
    N = cat.size
    exhaustive = _resolve_mode(q, n, exhaustive)
    jobs = []
    if exhaustive:
        stats = DesarguesStats(q=q, mode="exhaustive")
        for lo, hi in _chunks(N**6):
            jobs.append(
                lambda lo=lo, hi=hi: _desargues_chunk(
                    cat, np.column_stack(np.unravel_index(np.arange(lo, hi), (N,) * 6))
                )
            )
    else:
        n = 10_000 if n is None else n
        stats = DesarguesStats(q=q, mode=f"sampled:{n}:seed={seed}")
        picks = np.random.default_rng(seed % 2**64).integers(0, N, size=(n, 6))
        for lo, hi in _chunks(n):
            jobs.append(lambda a=picks[lo:hi]: _desargues_chunk(cat, a))
    return _run(jobs, stats, workers)
