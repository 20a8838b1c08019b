"""The realified Hilbert space: Kahler tensors, quadratic expectation
functions, their brackets, associated vector fields, and the projected
gradient eigensolver.

A complex vector psi with components q_k + i p_k is carried around as the
pair of real arrays (q, p).  The complex structure acts as multiplication
by i: (q, p) -> (-p, q).

Sign conventions: the Hermitian product is antilinear in its *first*
argument, g = Re<.,.> and w = Im<.,.>.  With that choice the compatibility
identity reads g(X, Y) = w(X, JY) (the commonly quoted g(X,Y) = w(JX,Y)
would require J to act as -i and then the connection form of the projective
module would give theta(J Delta) = -i).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import DimensionError, check_hermitian

TOL_NUM = 1e-10


class InvalidStartError(ValueError):
    """Zero starting vector handed to an iterative solver."""


@dataclass(frozen=True)
class RealifiedState:
    """Real coordinates (q, p) of a complex vector."""

    q: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "q", np.asarray(self.q, dtype=float))
        object.__setattr__(self, "p", np.asarray(self.p, dtype=float))
        if self.q.shape != self.p.shape or self.q.ndim != 1:
            raise DimensionError("q and p must be equal-length 1-d arrays")

    @property
    def dim(self) -> int:
        return self.q.shape[0]

    def to_complex(self) -> np.ndarray:
        return self.q + 1j * self.p

    @classmethod
    def from_complex(cls, z) -> "RealifiedState":
        z = np.asarray(z, dtype=complex)
        return cls(z.real.copy(), z.imag.copy())

    def norm(self) -> float:
        return float(np.sqrt(self.q @ self.q + self.p @ self.p))


@dataclass(frozen=True)
class TangentVector:
    """Tangent vector at a point, components in (d/dq, d/dp) order."""

    base: RealifiedState
    components: np.ndarray

    def __post_init__(self):
        comp = np.asarray(self.components, dtype=float)
        object.__setattr__(self, "components", comp)
        if comp.shape != (2 * self.base.dim,):
            raise DimensionError("need 2n components")
        if not np.all(np.isfinite(comp)):
            raise ValueError("tangent components must be finite")

    def to_complex(self) -> np.ndarray:
        n = self.base.dim
        return self.components[:n] + 1j * self.components[n:]


def _realify(z: np.ndarray) -> np.ndarray:
    return np.concatenate([z.real, z.imag])


@dataclass(frozen=True)
class KaehlerTriple:
    """Constant-coefficient J, g, w on the 2n real coordinates."""

    dim: int

    @property
    def j_matrix(self) -> np.ndarray:
        n = self.dim
        z = np.zeros((n, n))
        i = np.eye(n)
        return np.block([[z, -i], [i, z]])

    @property
    def g_matrix(self) -> np.ndarray:
        return np.eye(2 * self.dim)

    @property
    def omega_matrix(self) -> np.ndarray:
        n = self.dim
        z = np.zeros((n, n))
        i = np.eye(n)
        return np.block([[z, i], [-i, z]])


def hermitian_split(psi1: RealifiedState, psi2: RealifiedState):
    """(Re, Im) of the Hermitian product <psi1, psi2>, antilinear in psi1."""
    if psi1.dim != psi2.dim:
        raise DimensionError("state dimensions differ")
    g_val = float(psi1.q @ psi2.q + psi1.p @ psi2.p)
    w_val = float(psi1.q @ psi2.p - psi1.p @ psi2.q)
    return g_val, w_val


def quadratic_function(a: np.ndarray, psi: RealifiedState) -> float:
    """f_A(psi) = <psi, A psi> / 2 (real for Hermitian A)."""
    a = check_hermitian(a)
    if a.shape[0] != psi.dim:
        raise DimensionError("operator and state dimensions differ")
    z = psi.to_complex()
    return float((z.conj() @ (a @ z)).real) / 2.0


def _gradient_components(a: np.ndarray, psi: RealifiedState) -> np.ndarray:
    """Coordinate differential of f_A at psi; equals the realification of
    A psi since g is the flat Euclidean metric."""
    az = a @ psi.to_complex()
    return _realify(az)


def bracket_g(a: np.ndarray, b: np.ndarray, psi: RealifiedState) -> float:
    """G(df_A, df_B) at psi; equals f_{AB+BA}(psi)."""
    da = _gradient_components(check_hermitian(a), psi)
    db = _gradient_components(check_hermitian(b), psi)
    return float(da @ db)


def bracket_omega(a: np.ndarray, b: np.ndarray, psi: RealifiedState) -> float:
    """Omega(df_A, df_B) at psi; equals f_{-i[A,B]}(psi)."""
    n = psi.dim
    da = _gradient_components(check_hermitian(a), psi)
    db = _gradient_components(check_hermitian(b), psi)
    return float(da[:n] @ db[n:] - da[n:] @ db[:n])


def star_product(a: np.ndarray, b: np.ndarray, psi: RealifiedState) -> complex:
    """bracket_g + i bracket_omega; equals <psi, AB psi>."""
    return complex(bracket_g(a, b, psi), bracket_omega(a, b, psi))


def gradient_vf(a: np.ndarray, psi: RealifiedState) -> TangentVector:
    """Gradient vector field of f_A at psi: the realification of A psi."""
    a = check_hermitian(a)
    if a.shape[0] != psi.dim:
        raise DimensionError("operator and state dimensions differ")
    return TangentVector(psi, _realify(a @ psi.to_complex()))


def hamiltonian_vf(a: np.ndarray, psi: RealifiedState) -> TangentVector:
    """Hamiltonian vector field of f_A at psi: realification of i A psi."""
    a = check_hermitian(a)
    if a.shape[0] != psi.dim:
        raise DimensionError("operator and state dimensions differ")
    return TangentVector(psi, _realify(1j * (a @ psi.to_complex())))


def flow_hamiltonian(a: np.ndarray, psi0: RealifiedState, t_final: float,
                     step: float = 1e-3):
    """Integrate the Hamiltonian flow z' = i A z with fixed-step RK4.

    Returns (times, states) with states a list of RealifiedState sampled at
    every step, endpoints included.
    """
    a = check_hermitian(a)
    n_steps = max(1, int(round(t_final / step)))
    h = t_final / n_steps
    z = psi0.to_complex().astype(complex)

    def rhs(v):
        return 1j * (a @ v)

    times = [0.0]
    states = [RealifiedState.from_complex(z)]
    for k in range(n_steps):
        k1 = rhs(z)
        k2 = rhs(z + 0.5 * h * k1)
        k3 = rhs(z + 0.5 * h * k2)
        k4 = rhs(z + h * k3)
        z = z + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        times.append((k + 1) * h)
        states.append(RealifiedState.from_complex(z))
    return np.array(times), states


def expectation_trace_samples(a: np.ndarray, psi0: RealifiedState,
                              t_final: float, step: float = 1e-3):
    """Hamiltonian flow with per-step (t, e_A, norm) samples and the
    conservation drifts of both quantities.

    Returns (samples, norm_drift, e_drift).
    """
    times, states = flow_hamiltonian(a, psi0, t_final, step)
    samples = []
    for t, st in zip(times, states):
        z = st.to_complex()
        n2 = float((z.conj() @ z).real)
        e = float((z.conj() @ (a @ z)).real) / n2
        samples.append((float(t), e, float(np.sqrt(n2))))
    norms = np.array([s[2] for s in samples])
    es = np.array([s[1] for s in samples])
    return samples, float(np.abs(norms - norms[0]).max()), float(
        np.abs(es - es[0]).max())


def critical_point_eigensolve(a: np.ndarray, psi0: RealifiedState,
                              step: float | None = None,
                              max_iter: int = 100_000,
                              mode: str = "ascent",
                              tol: float | None = None,
                              trace: list | None = None):
    """Projected-gradient iteration on the Rayleigh quotient
    e_A(psi) = <psi, A psi> / <psi, psi>.

    Critical points of f_A are exactly the eigenvectors of A; the quotient at
    a critical point is the eigenvalue.  Fixed step, renormalizing every
    iteration; stops when ||A psi - e psi|| < tol.

    mode: "ascent" climbs toward the largest eigenvalue, "descent" toward the
    smallest.  If trace is a list, (iteration, e_A, residual) triples are
    appended to it.

    Returns (eigenvalue, state, converged).
    """
    a = check_hermitian(a)
    if psi0.norm() == 0.0:
        raise InvalidStartError("starting vector must be nonzero")
    if mode not in ("ascent", "descent"):
        raise ValueError(f"unknown mode {mode!r}")
    norm_a = np.linalg.norm(a, 2)
    if step is None:
        step = 0.1 / max(norm_a, 1e-300)
    if step <= 0:
        raise ValueError("step must be positive")
    if tol is None:
        tol = 1e-9 * max(norm_a, 1e-300)
    sign = 1.0 if mode == "ascent" else -1.0

    z = psi0.to_complex()
    z = z / np.linalg.norm(z)
    converged = False
    e = 0.0
    for it in range(max_iter + 1):
        az = a @ z
        e = float((z.conj() @ az).real)
        resid_vec = az - e * z
        resid = float(np.linalg.norm(resid_vec))
        if trace is not None:
            trace.append((it, e, resid))
        if resid < tol:
            converged = True
            break
        if it == max_iter:
            break
        z = z + sign * step * resid_vec
        z = z / np.linalg.norm(z)
    return e, RealifiedState.from_complex(z), converged
