"""Hermitian operators, orthogonal matrix bases, structure constants, and the
real coordinate chart on the space of Hermitian matrices.

Conventions are fixed once and for all here:

* the basis element with flat index 0 is ``sqrt(2/n) * I``;
* for n=2 the remaining elements are, in order,
  ``[[0,i],[-i,0]]``, ``[[0,1],[1,0]]``, ``diag(1,-1)``;
* for n=3 they are the eight standard Gell-Mann matrices in their usual order;
* for n > 3 the generalized Gell-Mann ordering is used: symmetric off-diagonal
  pairs, then antisymmetric pairs, then the diagonal elements.

All bases satisfy ``Tr(b[mu] @ b[nu]) == 2 * delta(mu, nu)``, and the real
coordinates of a Hermitian A are ``y[mu] = Tr(b[mu] @ A) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

TOL_HERM = 1e-10
TOL_NUM = 1e-10


class DimensionError(ValueError):
    """Dimension below 2 or mismatched operand dimensions."""


class HermiticityError(ValueError):
    """Matrix is not Hermitian within tolerance."""


class BasisError(ValueError):
    """Basis violates its orthogonality/normalization invariants."""


def check_hermitian(a: np.ndarray, tol: float = TOL_HERM) -> np.ndarray:
    """Validate Hermiticity of a square complex matrix and return it as
    a complex ndarray.  Tolerance is absolute after scaling by max|entry|."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    scale = max(np.abs(a).max(), 1.0)
    if np.abs(a - a.conj().T).max() > tol * scale:
        raise HermiticityError("matrix is not Hermitian within tolerance")
    return a


@dataclass(frozen=True)
class OrthogonalBasis:
    """A trace-orthogonal Hermitian basis with the identity in slot 0."""

    dim: int
    elements: tuple  # n^2 matrices, each (n, n) complex

    def __post_init__(self):
        n = self.dim
        if len(self.elements) != n * n:
            raise BasisError(f"need {n * n} elements, got {len(self.elements)}")

    @property
    def size(self) -> int:
        return self.dim * self.dim

    def stack(self) -> np.ndarray:
        """All elements as a single (n^2, n, n) array."""
        return np.stack(self.elements)

    def verify(self, tol: float = 1e-12) -> None:
        """Raise BasisError unless Tr(b_mu b_nu) = 2 delta_mu_nu and element 0
        is sqrt(2/n) I."""
        n = self.dim
        stack = self.stack()
        gram = np.einsum("aij,bji->ab", stack, stack).real / 2.0
        if np.abs(gram - np.eye(n * n)).max() > tol:
            raise BasisError("basis is not trace-orthonormal")
        if np.abs(self.elements[0] - np.sqrt(2.0 / n) * np.eye(n)).max() > tol:
            raise BasisError("element 0 must be sqrt(2/n) * identity")


# The two-level basis used throughout the qubit fixtures.  Note the
# unconventional first element: [[0, i], [-i, 0]] rather than the usual
# sigma_y, and the role swap with [[0, 1], [1, 0]].
_SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1j], [-1j, 0]]),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.diag([1.0, -1.0]).astype(complex),
)

_LAMBDA3 = (
    np.sqrt(2.0 / 3.0) * np.eye(3, dtype=complex),
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]),
    np.diag([1.0, -1.0, 0.0]).astype(complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
    np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]]),
    np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]),
    np.diag([1.0, 1.0, -2.0]).astype(complex) / np.sqrt(3.0),
)


def gellmann_basis(n: int) -> OrthogonalBasis:
    """Orthogonal Hermitian basis of the n x n matrices, identity first.

    n=2 and n=3 return the fixed matrices above; larger n uses the
    generalized Gell-Mann construction.
    """
    if n < 2:
        raise DimensionError(f"dimension must be >= 2, got {n}")
    if n == 2:
        return OrthogonalBasis(2, _SIGMA)
    if n == 3:
        return OrthogonalBasis(3, _LAMBDA3)

    elems = [np.sqrt(2.0 / n) * np.eye(n, dtype=complex)]
    for j in range(n):
        for k in range(j + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[j, k] = m[k, j] = 1.0
            elems.append(m)
    for j in range(n):
        for k in range(j + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[j, k] = -1j
            m[k, j] = 1j
            elems.append(m)
    for l in range(1, n):
        diag = np.zeros(n)
        diag[:l] = 1.0
        diag[l] = -l
        elems.append(np.sqrt(2.0 / (l * (l + 1))) * np.diag(diag).astype(complex))
    return OrthogonalBasis(n, tuple(elems))


@dataclass(frozen=True)
class StructureConstants:
    """Antisymmetric C and symmetric-part d arrays of an orthogonal basis.

    Defined through

        [b_mu, b_nu]   = 2i C_{mu nu rho} b_rho
        [b_mu, b_nu]_+ = 2 sqrt(2/n) b_0 delta_{mu nu} + 2 d_{mu nu rho} b_rho

    The explicit b_0 delta term means d carries no (mu, mu, 0) component;
    d entries with a 0 somewhere else are still nonzero.
    """

    dim: int
    c: np.ndarray  # (n^2, n^2, n^2) real
    d: np.ndarray  # (n^2, n^2, n^2) real
    basis: OrthogonalBasis = field(repr=False)

    @property
    def d_traceless(self) -> np.ndarray:
        """The d block over traceless indices 1..n^2-1 (totally symmetric)."""
        return self.d[1:, 1:, 1:]


def structure_constants(basis: OrthogonalBasis) -> StructureConstants:
    """Compute C and d for an orthogonal basis from triple traces."""
    basis.verify()
    n = basis.dim
    stack = basis.stack()
    # T[a, b, c] = Tr(b_a b_b b_c)
    prod = np.einsum("aij,bjk->abik", stack, stack)
    triple = np.einsum("abik,cki->abc", prod, stack)
    c = ((triple - triple.transpose(1, 0, 2)) / 4.0).imag
    d = ((triple + triple.transpose(1, 0, 2)) / 4.0).real
    m = n * n
    d[np.arange(m), np.arange(m), 0] -= np.sqrt(2.0 / n)
    return StructureConstants(n, c, d, basis)


def to_dual(a: np.ndarray, basis: OrthogonalBasis) -> np.ndarray:
    """Real coordinates y[mu] = Tr(b_mu A) / 2 of a Hermitian matrix."""
    a = check_hermitian(a)
    if a.shape[0] != basis.dim:
        raise DimensionError("operator and basis dimensions differ")
    return np.einsum("aij,ji->a", basis.stack(), a).real / 2.0


def from_dual(y: np.ndarray, basis: OrthogonalBasis) -> np.ndarray:
    """Hermitian matrix with the given coordinates: sum_mu y[mu] b_mu."""
    y = np.asarray(y, dtype=float)
    if y.shape != (basis.size,):
        raise DimensionError(
            f"expected {basis.size} coordinates, got shape {y.shape}"
        )
    return np.einsum("a,aij->ij", y, basis.stack())


def spectral_oracle(a: np.ndarray):
    """Eigenvalues (descending) and matching orthonormal eigenvector columns.

    This is the reference decomposition every other spectral claim in the
    package is tested against.
    """
    a = check_hermitian(a)
    w, v = np.linalg.eigh(a)
    order = np.argsort(w)[::-1]
    return w[order], v[:, order]
