import numpy as np

from geomstates import (
    PAIRING_SCALE,
    calibrate_pairing_scale,
    distributions_at,
    gellmann_basis,
    jtilde_endo,
    lambda_at,
    pushforward_check,
    r_endo,
    riemann_jordan_at,
    structure_constants,
    to_dual,
)

from conftest import random_hermitian, random_state

B2 = gellmann_basis(2)
B3 = gellmann_basis(3)
SC3 = structure_constants(B3)


def expected_lambda_rank(y):
    return 0 if np.dot(y[1:], y[1:]) < 1e-18 else 2


def expected_r_rank(y):
    y0, v2 = y[0], float(np.dot(y[1:], y[1:]))
    if y0 * y0 + v2 < 1e-18:
        return 0
    if abs(y0) < 1e-9:
        return 2
    if abs(y0 * y0 - v2) < 1e-12:
        return 3
    return 4


def test_lambda_vanishes_at_identity_direction():
    for n, basis in ((2, B2), (3, B3)):
        y = np.zeros(n * n)
        y[0] = 1.0
        assert np.abs(lambda_at(y, basis).matrix).max() < 1e-14


def test_lambda_rank_two_at_pure_state():
    t = lambda_at(np.array([0.5, 0, 0, 0.5]), B2)
    assert t.rank() == 2
    assert np.abs(t.matrix + t.matrix.T).max() < 1e-12


def test_lambda_qubit_closed_form(rng):
    # 2 (y1 d2^d3 + y2 d3^d1 + y3 d1^d2) as a matrix over differentials
    y = np.concatenate([[0.5], rng.normal(size=3)])
    m = lambda_at(y, B2).matrix
    ref = np.zeros((4, 4))
    ref[2, 3] = 2 * y[1]
    ref[3, 1] = 2 * y[2]
    ref[1, 2] = 2 * y[3]
    ref -= ref.T
    assert np.abs(m - ref).max() < 1e-12


def test_lambda_qutrit_matches_constant_contraction(rng):
    y = rng.normal(size=9)
    m = lambda_at(y, B3).matrix
    ref = 2 * np.einsum("mnr,r->mn", SC3.c, y)
    assert np.abs(m + m.T).max() < 1e-12
    assert np.abs(m - ref).max() < 1e-10


def test_lambda_annihilates_identity_coordinate(rng):
    for basis in (B2, B3):
        y = rng.normal(size=basis.size)
        m = lambda_at(y, basis).matrix
        assert np.abs(m[0]).max() < 1e-12
        assert np.abs(m[:, 0]).max() < 1e-12


def test_lambda_bracket_jacobi_identity(rng):
    # cyclic sum of nested brackets of linear coordinate functions
    c = SC3.c
    for _ in range(20):
        y = rng.normal(size=9)
        a, b, d = (rng.normal(size=9) for _ in range(3))

        def brk(u, v):
            return 2 * np.einsum("mnr,m,n->r", c, u, v)

        total = (
            np.dot(brk(a, brk(b, d)), y)
            + np.dot(brk(b, brk(d, a)), y)
            + np.dot(brk(d, brk(a, b)), y)
        )
        assert abs(total) < 1e-10


def test_riemann_jordan_zero_point():
    assert np.abs(riemann_jordan_at(np.zeros(4), B2).matrix).max() == 0.0


def test_riemann_jordan_qubit_ranks():
    assert riemann_jordan_at(np.array([0.5, 0, 0, 0.5]), B2).rank() == 3
    assert riemann_jordan_at(np.array([0.5, 0, 0, 0.0]), B2).rank() == 4
    assert riemann_jordan_at(np.array([0.0, 0.1, 0.2, 0.0]), B2).rank() == 2


def test_riemann_jordan_symmetry_and_d_form(rng):
    y = rng.normal(size=9)
    m = riemann_jordan_at(y, B3).matrix
    assert np.abs(m - m.T).max() < 1e-12
    # coordinate form: 2 sqrt(2/3) y0 delta + 2 d_{mu nu rho} y^rho
    ref = (2 * np.sqrt(2 / 3) * y[0] * np.eye(9)
           + 2 * np.einsum("mnr,r->mn", SC3.d, y))
    assert np.abs(m - ref).max() < 1e-10


def test_qubit_rank_laws_small_grid():
    grid = np.linspace(-0.4, 0.4, 9)
    for y0 in grid:
        for y1 in grid:
            for y3 in (0.0, 0.2, -y1, y1):
                y = np.array([y0, y1, 0.0, y3])
                assert lambda_at(y, B2).rank() == expected_lambda_rank(y)
                assert riemann_jordan_at(y, B2).rank() == expected_r_rank(y)


def test_endomorphism_trivial_cases(rng):
    xi = random_hermitian(rng, 3)
    assert np.abs(jtilde_endo(xi, xi)).max() < 1e-12
    assert np.abs(r_endo(xi, np.eye(3)) - 2 * xi).max() < 1e-12


def test_endomorphisms_commute(rng):
    for _ in range(100):
        xi, a = random_hermitian(rng, 3), random_hermitian(rng, 3)
        jr = jtilde_endo(xi, r_endo(xi, a))
        rj = r_endo(xi, jtilde_endo(xi, a))
        assert np.abs(jr - rj).max() < 1e-12
        xi2 = xi @ xi
        assert np.abs(jr - (-1j) * (a @ xi2 - xi2 @ a)).max() < 1e-10


def test_distributions_central_point():
    y = np.array([1.0, 0, 0, 0])
    rep = distributions_at(y, B2)
    assert rep.dim_lambda == 0
    assert rep.dim_0 == 0
    assert rep.dim_r == 4


def test_distributions_generic_qubit():
    rep = distributions_at(np.array([0.5, 0.1, 0.2, 0.1]), B2)
    assert rep.dims == (2, 4, 2, 4)


def test_distributions_pure_qubit():
    rep = distributions_at(np.array([0.5, 0, 0, 0.5]), B2)
    assert rep.dim_0 == rep.dim_lambda == 2


def test_distribution_dimension_inequalities(rng):
    for _ in range(10):
        rep = distributions_at(rng.normal(size=9), B3)
        assert rep.dim_0 <= min(rep.dim_lambda, rep.dim_r)
        assert rep.dim_1 <= rep.dim_lambda + rep.dim_r
        assert rep.dim_1 <= 9


def test_distribution_basis_operators_are_hermitian(rng):
    rep = distributions_at(rng.normal(size=4), B2)
    for op in rep.basis_operators(B2, "1"):
        assert np.abs(op - op.conj().T).max() < 1e-12


def test_d1_matches_gl_orbit_tangent_rank(rng):
    # differentiate T -> T xi T^dagger at T = I by central differences over a
    # real basis of gl(n) and compare the span's rank with dim D1
    for spec in ([0.6, 0.4, 0.0], [1.0, 0.0, 0.0], [0.5, 0.3, 0.2]):
        w = np.array(spec)
        u = np.linalg.qr(random_hermitian(rng, 3)
                         + 1j * random_hermitian(rng, 3))[0]
        xi = u @ np.diag(w) @ u.conj().T
        xi = (xi + xi.conj().T) / 2
        y = to_dual(xi, B3)
        rep = distributions_at(y, B3)
        eps = 1e-5
        cols = []
        for i in range(3):
            for j in range(3):
                for scale in (1.0, 1j):
                    x = np.zeros((3, 3), complex)
                    x[i, j] = scale
                    tp = np.eye(3) + eps * x
                    tm = np.eye(3) - eps * x
                    diff = (tp @ xi @ tp.conj().T
                            - tm @ xi @ tm.conj().T) / (2 * eps)
                    cols.append(to_dual(diff, B3))
        m = np.array(cols).T
        s = np.linalg.svd(m, compute_uv=False)
        fd_rank = int(np.sum(s > 1e-9 * s[0]))
        assert fd_rank == rep.dim_1


def test_pushforward_identity_samples(rng):
    for n in (2, 3):
        for _ in range(20):
            a, b = random_hermitian(rng, n), random_hermitian(rng, n)
            psi = random_state(rng, n)
            lhs, rhs = pushforward_check(psi, a, b)
            assert abs(lhs - rhs) < 1e-10


def test_pushforward_identity_operator(rng):
    psi = random_state(rng, 2)
    lhs, rhs = pushforward_check(psi, np.eye(2), np.eye(2))
    assert abs(lhs.imag) < 1e-12 and abs(rhs.imag) < 1e-12
    assert abs(lhs - psi.norm() ** 2) < 1e-12


def test_pushforward_commuting_real(rng):
    d1, d2 = np.diag(rng.normal(size=3)), np.diag(rng.normal(size=3))
    psi = random_state(rng, 3)
    lhs, rhs = pushforward_check(psi, d1, d2)
    assert abs(lhs.imag) < 1e-12 and abs(rhs.imag) < 1e-12


def test_pairing_scale_is_frozen_at_one():
    assert PAIRING_SCALE == 1.0
    assert abs(calibrate_pairing_scale() - 1.0) < 1e-10
