"""The ray space: gauge-fixed rays, the momentum map onto rank-one
projectors, expectation values, the connection one-form, the projected
Hermitian tensor, and transition probabilities between extremal states."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import DimensionError, check_hermitian
from .realified import RealifiedState, TangentVector

TOL_PURE = 1e-10


class ZeroVectorError(ValueError):
    """A nonzero vector was required."""


class NotExtremalError(ValueError):
    """Operation defined only on rank-one (pure) states."""


@dataclass(frozen=True)
class Ray:
    """Equivalence class of a nonzero vector under nonzero complex scaling.

    The stored representative is the unit vector whose first nonvanishing
    coordinate is real and positive.
    """

    representative: RealifiedState

    @classmethod
    def from_state(cls, psi: RealifiedState, tol: float = 1e-14) -> "Ray":
        z = psi.to_complex()
        nrm = np.linalg.norm(z)
        if nrm == 0.0:
            raise ZeroVectorError("cannot form the ray of the zero vector")
        z = z / nrm
        for zk in z:
            if abs(zk) > tol:
                z = z * (zk.conjugate() / abs(zk))
                break
        return cls(RealifiedState.from_complex(z))


@dataclass(frozen=True)
class PureDensity:
    """A rank-one projector with unit trace."""

    op: np.ndarray

    def __post_init__(self):
        op = check_hermitian(self.op)
        object.__setattr__(self, "op", op)
        if abs(np.trace(op).real - 1.0) > 1e-12:
            raise NotExtremalError("trace must be 1")
        if np.abs(op @ op - op).max() > TOL_PURE:
            raise NotExtremalError("operator is not idempotent (not rank one)")

    @property
    def dim(self) -> int:
        return self.op.shape[0]


def momentum_map(psi: RealifiedState) -> PureDensity:
    """psi -> |psi><psi| / <psi, psi>, the normalized rank-one projector.

    Invariant under rescaling psi by any nonzero complex number.
    """
    z = psi.to_complex()
    n2 = float((z.conj() @ z).real)
    if n2 == 0.0:
        raise ZeroVectorError("momentum map undefined at the zero vector")
    return PureDensity(np.outer(z, z.conj()) / n2)


def expectation(a: np.ndarray, psi: RealifiedState) -> float:
    """e_A(psi) = <psi, A psi> / <psi, psi>; scale invariant."""
    a = check_hermitian(a)
    z = psi.to_complex()
    if a.shape[0] != z.shape[0]:
        raise DimensionError("operator and state dimensions differ")
    n2 = float((z.conj() @ z).real)
    if n2 == 0.0:
        raise ZeroVectorError("expectation undefined at the zero vector")
    return float((z.conj() @ (a @ z)).real) / n2


def connection_form(psi: RealifiedState, v: TangentVector) -> complex:
    """theta(psi)(v) = <psi, v> / <psi, psi>.

    Vertical directions are recovered exactly: theta on the dilation
    direction is 1 and on its J-rotation is i.
    """
    z = psi.to_complex()
    n2 = float((z.conj() @ z).real)
    if n2 == 0.0:
        raise ZeroVectorError("connection form undefined at the zero vector")
    return complex(z.conj() @ v.to_complex()) / n2


def projected_hermitian(psi: RealifiedState, v: TangentVector,
                        w: TangentVector) -> complex:
    """The Hermitian tensor that descends to the ray space, evaluated on
    (v, w):

        <v, w>/<psi,psi> - <v, psi><psi, w>/<psi,psi>^2

    Annihilates the dilation direction and its J-rotation; invariant under
    rescaling psi.
    """
    z = psi.to_complex()
    n2 = float((z.conj() @ z).real)
    if n2 == 0.0:
        raise ZeroVectorError("tensor undefined at the zero vector")
    vc = v.to_complex()
    wc = w.to_complex()
    return complex(vc.conj() @ wc) / n2 - complex(
        (vc.conj() @ z) * (z.conj() @ wc)
    ) / n2**2


def transition_probability(rho1: PureDensity, rho2: PureDensity) -> float:
    """p(rho1, rho2) = Tr(rho1 rho2) on extremal states.

    Symmetric, valued in [0, 1], and equal to 1 exactly when the two
    projectors coincide.
    """
    if rho1.dim != rho2.dim:
        raise DimensionError("state dimensions differ")
    return float(np.trace(rho1.op @ rho2.op).real)
