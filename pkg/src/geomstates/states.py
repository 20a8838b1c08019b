"""The convex body of density states: positivity certification, rank
strata, GL actions on the cone and on normalized states, faces, convex
decompositions, the qutrit Bloch-vector algebra, and the tangency check
for curves inside a stratum."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .basis import (
    DimensionError,
    check_hermitian,
    from_dual,
    gellmann_basis,
    spectral_oracle,
    structure_constants,
    to_dual,
)
from .dual_tensors import (
    TOL_RANK,
    distributions_at,
    subspace_intersection,
)
from .projective import PureDensity

TOL_PSD = 1e-10
TOL_TAN = 1e-6


class SingularTransformError(ValueError):
    """GL action requested with a (numerically) singular matrix."""


class InvalidCurveError(ValueError):
    """Curve samples that are not all certified states of the same rank."""


@dataclass(frozen=True)
class Rejection:
    """Why a Hermitian matrix failed density-state certification."""

    violated: str
    detail: str = ""

    def __bool__(self):
        return False


@dataclass(frozen=True)
class DensityState:
    """A certified trace-one positive semidefinite operator."""

    op: np.ndarray
    rank: int
    spectrum: np.ndarray  # descending

    @property
    def dim(self) -> int:
        return self.op.shape[0]

    def __bool__(self):
        return True


@lru_cache(maxsize=None)
def _cached_basis(n: int):
    return gellmann_basis(n)


@lru_cache(maxsize=None)
def _cached_constants(n: int):
    return structure_constants(_cached_basis(n))


def _qutrit_minor_conditions(a: np.ndarray, tol: float):
    """The explicit 3x3 positivity inequalities (diagonal, 2x2 principal
    minors, determinant).  Returns (ok, first violated condition or '')."""
    d0, d1, d2 = a[0, 0].real, a[1, 1].real, a[2, 2].real
    h, g, f = a[1, 0], a[0, 2], a[2, 1]
    checks = [
        (d0 >= -tol, "a >= 0"),
        (d1 >= -tol, "b >= 0"),
        (d2 >= -tol, "c >= 0"),
        (abs(f) ** 2 <= d1 * d2 + tol, "|f|^2 <= bc"),
        (abs(g) ** 2 <= d2 * d0 + tol, "|g|^2 <= ca"),
        (abs(h) ** 2 <= d0 * d1 + tol, "|h|^2 <= ab"),
    ]
    det = (
        d0 * d1 * d2
        + 2.0 * (f * g * h).real
        - (d0 * abs(f) ** 2 + d1 * abs(g) ** 2 + d2 * abs(h) ** 2)
    )
    checks.append((det >= -tol, "det >= 0"))
    for ok, name in checks:
        if not ok:
            return False, name
    return True, ""


def certify_density(a: np.ndarray, tol_psd: float = TOL_PSD,
                    tol_rank: float = TOL_RANK):
    """Certify a Hermitian matrix as a density state.

    Accepts iff Tr = 1 (within 1e-10) and the spectrum is >= -tol_psd.
    For n=3 the explicit principal-minor inequalities are evaluated as a
    cross-check; a disagreement with the spectral criterion raises, since
    the two are mathematically equivalent.

    Returns a DensityState on acceptance, a Rejection otherwise.
    """
    a = check_hermitian(a)
    tr = np.trace(a).real
    if abs(tr - 1.0) > 1e-10:
        return Rejection("trace", f"Tr = {tr!r}, expected 1")
    w, _ = spectral_oracle(a)
    spectral_ok = w[-1] >= -tol_psd
    if a.shape[0] == 3:
        minors_ok, which = _qutrit_minor_conditions(a, 10.0 * tol_psd)
        # Eigenvalue margin comfortably outside the minor tolerance band
        # must agree with the minor criterion.
        if spectral_ok != minors_ok and abs(w[-1]) > 100.0 * tol_psd:
            raise ArithmeticError(
                "spectral and principal-minor positivity criteria disagree: "
                f"min eigenvalue {w[-1]}, minor check {which or 'passed'}"
            )
    if not spectral_ok:
        return Rejection("negative eigenvalue", f"min eigenvalue = {w[-1]!r}")
    rank = int(np.sum(w > tol_rank * max(w[0], tol_rank)))
    return DensityState(a, rank, w)


def require_density(a: np.ndarray) -> DensityState:
    out = certify_density(a)
    if isinstance(out, Rejection):
        raise ValueError(f"not a density state: {out.violated} ({out.detail})")
    return out


def stratum(rho: DensityState) -> int:
    """Rank stratum the state belongs to (1 = extremal/pure)."""
    return rho.rank


def gl_act_cone(t: np.ndarray, xi: np.ndarray,
                max_cond: float = 1e12) -> np.ndarray:
    """Action (T, xi) -> T xi T^dagger of the general linear group on the cone.

    Preserves the signature (number of positive/negative eigenvalues) of xi.
    """
    t = np.asarray(t, dtype=complex)
    xi = check_hermitian(xi)
    if t.shape != xi.shape:
        raise DimensionError("transform and operand dimensions differ")
    if np.linalg.cond(t) > max_cond:
        raise SingularTransformError("transform is singular or ill-conditioned")
    return t @ xi @ t.conj().T


def gl_act_states(t: np.ndarray, rho: DensityState) -> DensityState:
    """Normalized GL action (T, rho) -> T rho T^dagger / Tr(T rho T^dagger).

    Preserves the rank stratum.
    """
    out = gl_act_cone(t, rho.op)
    tr = np.trace(out).real
    if tr < 1e-14:
        raise SingularTransformError("image trace vanished")
    return require_density(out / tr)


@dataclass(frozen=True)
class FaceDescriptor:
    """The face of the convex body through a given state: the density
    states supported on the image of the base state."""

    base: DensityState
    image_basis: np.ndarray  # (n, k) orthonormal columns spanning Im rho
    dimension: int  # k^2 - 1

    def projector(self) -> np.ndarray:
        return self.image_basis @ self.image_basis.conj().T


def face_of(rho: DensityState, tol_rank: float = TOL_RANK) -> FaceDescriptor:
    w, v = spectral_oracle(rho.op)
    k = rho.rank
    return FaceDescriptor(rho, v[:, :k], k * k - 1)


def face_contains(face: FaceDescriptor, candidate: DensityState,
                  mode: str = "image", tol: float = 1e-9) -> bool:
    """Membership of a state in a face.

    mode "image": candidate supported on the image of the base state,
    i.e. Ker(base) contained in Ker(candidate).  This is the predicate that
    satisfies the face axioms (any segment of states with an interior point
    in the face lies in it).

    mode "kernel": the literal reversed inclusion Ker(candidate) contained
    in Ker(base), exposed so tests can demonstrate it fails the axioms.
    """
    p = face.projector()
    n = p.shape[0]
    if mode == "image":
        off = (np.eye(n) - p) @ candidate.op
        return bool(np.abs(off).max() <= tol)
    if mode == "kernel":
        wq, vq = spectral_oracle(candidate.op)
        kq = int(np.sum(wq > TOL_RANK * max(wq[0], TOL_RANK)))
        q = vq[:, :kq] @ vq[:, :kq].conj().T
        off = (np.eye(n) - q) @ face.base.op
        return bool(np.abs(off).max() <= tol)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ConvexDecomposition:
    """rho = sum_i weights[i] * components[i] with extremal components."""

    weights: np.ndarray
    components: tuple  # PureDensity instances

    def reconstruct(self) -> np.ndarray:
        return sum(w * c.op for w, c in zip(self.weights, self.components))


def convex_decompose_spectral(rho: DensityState,
                              threshold: float = TOL_RANK) -> ConvexDecomposition:
    """Eigen-decomposition of a state into orthogonal pure components."""
    w, v = spectral_oracle(rho.op)
    keep = w > threshold * max(w[0], threshold)
    weights = w[keep]
    comps = tuple(
        PureDensity(np.outer(v[:, i], v[:, i].conj()))
        for i in range(len(w)) if keep[i]
    )
    return ConvexDecomposition(weights, comps)


def qubit_from_bloch(y1: float, y2: float, y3: float) -> np.ndarray:
    """The 2x2 Hermitian trace-one matrix with ball coordinates (y1,y2,y3)."""
    return np.array(
        [[0.5 + y3, y2 + 1j * y1], [y2 - 1j * y1, 0.5 - y3]], dtype=complex
    )


def qubit_bloch_vector(rho: DensityState) -> np.ndarray:
    """Ball coordinates (y1, y2, y3) of a qubit state."""
    if rho.dim != 2:
        raise DimensionError("only defined for 2-level states")
    return to_dual(rho.op, _cached_basis(2))[1:]


def bloch_decompose_along(rho: DensityState, direction,
                          tol: float = 1e-12) -> ConvexDecomposition:
    """Decompose a qubit state along a line through the Bloch ball.

    The line through the state's ball point in the given direction meets the
    pure-state sphere of radius 1/2 in two points; they are the components
    and the weights are the unique convex coefficients.  A tangency (pure
    state, tangent direction) collapses to a single term.
    """
    if rho.dim != 2:
        raise DimensionError("Bloch decomposition requires a 2-level state")
    d = np.asarray(direction, dtype=float)
    if d.shape != (3,):
        raise DimensionError("direction must be a 3-vector")
    nd = np.linalg.norm(d)
    if nd < tol:
        raise ValueError("direction must be nonzero")
    d = d / nd
    v = qubit_bloch_vector(rho)
    vd = float(v @ d)
    disc = vd * vd - float(v @ v) + 0.25
    if disc < -1e-12:
        raise ValueError("line misses the pure-state sphere")
    root = np.sqrt(max(disc, 0.0))
    t_plus = -vd + root
    t_minus = -vd - root

    def pure_at(t):
        return PureDensity(qubit_from_bloch(*(v + t * d)))

    if t_plus - t_minus < 1e-10:
        return ConvexDecomposition(np.array([1.0]), (pure_at(t_plus),))
    p = -t_minus / (t_plus - t_minus)
    return ConvexDecomposition(
        np.array([p, 1.0 - p]), (pure_at(t_plus), pure_at(t_minus))
    )


def qutrit_star(a, b) -> np.ndarray:
    """The symmetric product on 8-vectors: (a * b)_l = sqrt(3) d_ljk a_j b_k."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d8 = _cached_constants(3).d_traceless
    return np.sqrt(3.0) * np.einsum("ljk,j,k->l", d8, a, b)


def qutrit_pure_from_bloch(n_vec, tol: float = 1e-8):
    """Build the rank-one qutrit state (1/3)(I + sqrt(3) n^a lambda_a).

    Accepts iff |n| = 1 and n * n = n under the d-symbol product; returns a
    PureDensity, or a Rejection naming the failed condition.
    """
    n_vec = np.asarray(n_vec, dtype=float)
    if n_vec.shape != (8,):
        raise DimensionError("need an 8-component vector")
    nrm = np.linalg.norm(n_vec)
    if abs(nrm - 1.0) > tol:
        return Rejection("norm", f"|n| = {nrm!r}, expected 1")
    star = qutrit_star(n_vec, n_vec)
    err = np.abs(star - n_vec).max()
    if err > tol:
        return Rejection("idempotency", f"max |n*n - n| = {err!r}")
    basis = _cached_basis(3)
    traceless = np.einsum("a,aij->ij", n_vec, basis.stack()[1:])
    rho = (np.eye(3) + np.sqrt(3.0) * traceless) / 3.0
    return PureDensity(rho)


def weyl_reduce(rho: DensityState) -> np.ndarray:
    """Sorted (descending) spectrum: the unitary-orbit label of the state.

    Eigenvalues within tolerance below zero are clipped to zero.
    """
    return np.maximum(rho.spectrum, 0.0)


def orbit_dimension(rho: DensityState) -> int:
    """Dimension of the unitary (coadjoint) orbit through the state: the
    rank of the Poisson distribution at that point."""
    basis = _cached_basis(rho.dim)
    y = to_dual(rho.op, basis)
    return distributions_at(y, basis).dim_lambda


def _traceless_subspace(m: int) -> np.ndarray:
    return np.eye(m)[:, 1:]


def stratum_tangent_basis(rho: DensityState) -> np.ndarray:
    """Orthonormal y-coordinate basis of the tangent space of the rank
    stratum at rho: the GL-orbit distribution restricted to trace-zero
    directions."""
    basis = _cached_basis(rho.dim)
    y = to_dual(rho.op, basis)
    report = distributions_at(y, basis)
    return subspace_intersection(
        report.basis_1, _traceless_subspace(basis.size)
    )


@dataclass(frozen=True)
class TangencyReport:
    times: np.ndarray
    residuals: np.ndarray
    max_residual: float


def tangency_check(samples, k: int, tol_tan: float = TOL_TAN) -> TangencyReport:
    """Verify that a sampled curve of rank-k states is tangent to its
    stratum.

    samples: list of (t, operator) with uniform t spacing.  At each interior
    sample the central-difference velocity is projected onto the stratum
    tangent space; the report lists the relative residuals.
    """
    if len(samples) < 3:
        raise InvalidCurveError("need at least 3 samples")
    ts = np.array([t for t, _ in samples], dtype=float)
    hs = np.diff(ts)
    if np.abs(hs - hs[0]).max() > 1e-9 * max(abs(hs[0]), 1e-300):
        raise InvalidCurveError("samples must be uniformly spaced")
    states = []
    for t, op in samples:
        st = certify_density(op)
        if isinstance(st, Rejection):
            raise InvalidCurveError(f"sample at t={t} is not a state: {st.violated}")
        if st.rank != k:
            raise InvalidCurveError(
                f"sample at t={t} has rank {st.rank}, expected {k}"
            )
        states.append(st)
    basis = _cached_basis(states[0].dim)
    h = hs[0]
    out_t, out_r = [], []
    for i in range(1, len(states) - 1):
        vel = (states[i + 1].op - states[i - 1].op) / (2.0 * h)
        vy = to_dual(vel, basis)
        tan = stratum_tangent_basis(states[i])
        resid_vec = vy - tan @ (tan.T @ vy)
        scale = max(np.linalg.norm(vy), 1.0)
        out_t.append(ts[i])
        out_r.append(float(np.linalg.norm(resid_vec)) / scale)
    residuals = np.array(out_r)
    return TangencyReport(np.array(out_t), residuals,
                          float(residuals.max()) if len(residuals) else 0.0)
