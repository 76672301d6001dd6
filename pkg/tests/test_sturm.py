import math

import numpy as np
import pytest

from eupbounds import (
    BoundaryCondition,
    CoefficientError,
    Confinement,
    DomainError,
    Pencil,
    SturmLiouvilleProblem,
    ball_oracle,
    cap_oracle,
    discretize,
    flat_disk_oracle,
    mode_1d,
    oracle_1d_p2,
    smallest_eigenvalues,
    spectrum_1d,
)
from eupbounds.onedim import mode_values
from eupbounds.sturm import eigenvalue_count_below, grid_nodes, solve
from eupbounds.twodim import nu1_of_theta

# squared zeros of the first Bessel family, for the flat radial problem
J0K_SQUARED = (5.783185962946785, 30.471262343662087, 74.88700679069327)


def _ones(x):
    return np.ones_like(x)


def box_problem(lo, hi, n):
    return SturmLiouvilleProblem(interval=(lo, hi), p_coef=_ones, w_coef=_ones,
                                 n_points=n)


def test_two_by_two_pencil():
    pencil = Pencil(diag=np.array([2.0, 2.0]), offdiag=np.array([-1.0]),
                    weights=np.array([1.0, 1.0]))
    res = smallest_eigenvalues(pencil, 2)
    assert res.eigenvalues[0] == pytest.approx(1.0, rel=1e-9)
    assert res.eigenvalues[1] == pytest.approx(3.0, rel=1e-9)


def test_flat_box_unit_eigenvalue():
    res = solve(box_problem(0.0, math.pi, 2000), 1)
    assert abs(res.eigenvalues[0] - 1.0) < 1e-5


def test_flat_box_scaling():
    res = solve(box_problem(0.0, 1.0, 2000), 1)
    assert abs(res.eigenvalues[0] - math.pi ** 2) / math.pi ** 2 < 1e-5


def test_flat_disk_first_eigenvalue():
    res = flat_disk_oracle(2000)
    assert abs(res.eigenvalues[0] - J0K_SQUARED[0]) / J0K_SQUARED[0] < 1e-4


def test_flat_disk_higher_modes_ascending():
    res = flat_disk_oracle(2000, k=3)
    assert list(res.eigenvalues) == sorted(res.eigenvalues)
    for lam, ref in zip(res.eigenvalues, J0K_SQUARED):
        assert abs(lam - ref) / ref < 1e-4


def test_eigenvalues_strictly_ascending():
    res = oracle_1d_p2(2.0, 1.0, 600, k=5)
    assert all(b > a for a, b in zip(res.eigenvalues, res.eigenvalues[1:]))


@pytest.mark.parametrize("name,runner,exact", [
    ("box", lambda n: solve(box_problem(0.0, math.pi, n), 1), 1.0),
    ("disk", lambda n: flat_disk_oracle(n), J0K_SQUARED[0]),
    ("cap", lambda n: cap_oracle(2.0, n), None),
    ("ball+", lambda n: ball_oracle(1.0, 1.0, n), math.pi ** 2 - 1.0),
    ("ball-", lambda n: ball_oracle(-1.0, 5.0, n), math.pi ** 2 / 25.0 + 1.0),
    ("p2", lambda n: oracle_1d_p2(2.0, 1.0, n, k=1), 4.0),
])
def test_richardson_order_is_two(name, runner, exact):
    if exact is None:
        nu1 = nu1_of_theta(2.0)
        exact = nu1 * (nu1 + 1.0)
    coarse = runner(400).eigenvalues[0]
    fine = runner(800).eigenvalues[0]
    order = math.log2(abs(coarse - exact) / abs(fine - exact))
    assert 1.8 <= order <= 2.2


def test_assembled_matrix_symmetric():
    prob = SturmLiouvilleProblem(
        interval=(-1.0, 1.0),
        p_coef=lambda x: 1.0 + x * x,
        w_coef=lambda x: 1.0 / (1.0 + x * x),
        n_points=64,
    )
    diag, offdiag, weights = discretize(prob)
    n = len(diag)
    dense = np.zeros((n, n))
    dense[np.arange(n), np.arange(n)] = diag
    dense[np.arange(n - 1), np.arange(1, n)] = offdiag
    dense[np.arange(1, n), np.arange(n - 1)] = offdiag
    assert np.array_equal(dense, dense.T)
    assert np.all(weights > 0.0)


def test_count_monotone_in_shift():
    diag, offdiag, weights = discretize(box_problem(0.0, math.pi, 200))
    pencil = Pencil(diag=diag, offdiag=offdiag, weights=weights)
    rng = np.random.default_rng(123)
    shifts = np.sort(rng.uniform(-10.0, 4.0 / (math.pi / 200) ** 2, 20))
    counts = [eigenvalue_count_below(pencil, float(s)) for s in shifts]
    assert all(b >= a for a, b in zip(counts, counts[1:]))


def test_eigenvector_residual():
    prob = box_problem(0.0, math.pi, 500)
    diag, offdiag, weights = discretize(prob)
    nodes, h = grid_nodes(prob)
    pencil = Pencil(diag=diag, offdiag=offdiag, weights=weights, grid=nodes,
                    grid_spacing=h)
    res = smallest_eigenvalues(pencil, 3, vectors=True)
    for lam, vec in zip(res.eigenvalues, res.eigenvectors):
        t_v = diag * vec
        t_v[:-1] += offdiag * vec[1:]
        t_v[1:] += offdiag * vec[:-1]
        resid = np.linalg.norm(t_v - lam * weights * vec)
        scale = max(np.linalg.norm(t_v), abs(lam) * np.linalg.norm(weights * vec))
        assert resid / scale < 1e-8


def test_eigenvectors_match_closed_form_modes():
    dx, alpha, n_points = 2.0, 1.0, 4000
    res = oracle_1d_p2(dx, alpha, n_points, k=3, vectors=True)
    conf = Confinement.slit(dx, alpha)
    f = 1.0 + alpha * res.grid ** 2
    h = res.grid_spacing
    for mode, vec in zip(spectrum_1d(conf, 3), res.eigenvectors):
        psi = vec / np.sqrt(f)
        psi /= math.sqrt(h * float(np.dot(psi, psi)))
        ref = mode_values(mode, conf, res.grid)
        diff = min(np.max(np.abs(psi - ref)), np.max(np.abs(psi + ref)))
        assert diff < 1e-3


def test_half_offset_grid_avoids_singular_endpoint():
    prob = SturmLiouvilleProblem(
        interval=(0.0, 1.0), p_coef=lambda x: x, w_coef=lambda x: x,
        bc_lo=BoundaryCondition.REGULARITY, n_points=32,
    )
    nodes, h = grid_nodes(prob)
    assert nodes[0] == pytest.approx(0.5 * h)
    assert len(nodes) == 32


def test_non_positive_coefficient_reported_with_coordinate():
    prob = SturmLiouvilleProblem(
        interval=(-1.0, 1.0), p_coef=lambda x: x, w_coef=_ones, n_points=32,
    )
    with pytest.raises(CoefficientError) as info:
        discretize(prob)
    assert info.value.coordinate <= 0.0


def test_problem_validation():
    with pytest.raises(DomainError):
        SturmLiouvilleProblem(interval=(1.0, 0.0), p_coef=_ones, w_coef=_ones)
    with pytest.raises(DomainError):
        SturmLiouvilleProblem(interval=(0.0, 1.0), p_coef=_ones, w_coef=_ones,
                              n_points=8)
    with pytest.raises(DomainError):
        SturmLiouvilleProblem(interval=(0.0, 1.0), p_coef=_ones, w_coef=_ones,
                              bc_hi=BoundaryCondition.REGULARITY)


def test_eigenvalue_request_limits():
    pencil = Pencil(diag=np.array([2.0, 2.0]), offdiag=np.array([-1.0]),
                    weights=np.array([1.0, 1.0]))
    with pytest.raises(DomainError):
        smallest_eigenvalues(pencil, 11)
    with pytest.raises(DomainError):
        smallest_eigenvalues(pencil, 3)


def test_oracle_1d_input_validation():
    with pytest.raises(DomainError):
        oracle_1d_p2(-1.0, 1.0, 100)
    with pytest.raises(DomainError):
        oracle_1d_p2(1.0, -1.0, 100)
