import numpy as np
import pytest

import schwartzlab as sl


@pytest.fixture
def grid():
    return sl.Grid.line(10.0, 256)


def gaussian(grid, width=1.0, a=None):
    x = grid.nodes()
    a = np.eye(2, dtype=complex) if a is None else a
    return np.exp(-x**2 / width)[:, None, None] * a


def test_grid_and_action(grid):
    assert grid.N == 256 and grid.L == 10.0
    assert grid.nodes()[0] == -10.0
    A = sl.Action.unitary(np.diag([0.0, 1.0]))
    e12 = np.array([[0, 1], [0, 0]], dtype=complex)
    x = 0.7
    assert np.allclose(A(x, e12), np.exp(-1j * x) * e12, atol=1e-14)
    with pytest.raises(sl.InputError):
        sl.Action.unitary(e12)


def test_calculus(grid):
    f = gaussian(grid)
    x = grid.nodes()
    df = (-2 * x * np.exp(-x**2))[:, None, None] * np.eye(2)
    assert np.abs(sl.differentiate(grid, f) - df).max() < 1e-9
    assert np.allclose(sl.integrate(grid, f), np.sqrt(np.pi) * np.eye(2), atol=1e-10)
    with pytest.raises(sl.DomainTruncationError):
        sl.differentiate(grid, gaussian(grid, width=50.0))


def test_twisted_convolution_matches_oracle(grid):
    rng = np.random.default_rng(3)
    h = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    A = sl.Action.unitary((h + h.conj().T) / 4)
    f = gaussian(grid, a=rng.normal(size=(2, 2)) + 0j)
    g = gaussian(grid, width=0.5, a=rng.normal(size=(2, 2)) + 0j)
    fast = sl.twisted_convolve(A, grid, f, g)
    slow = sl.twisted_convolve(A, grid, f, g, oracle=True)
    assert np.abs(fast - slow).max() < 1e-12
    triv = sl.twisted_convolve(sl.Action.trivial(2), grid, f, g)
    assert np.abs(triv - sl.convolve(grid, f, g)).max() < 1e-12


def test_sequence_identities(grid):
    A = sl.Action.unitary(np.array([[0.5, 0.2], [0.2, -0.3]], dtype=complex))
    x = grid.nodes()
    X, Y = np.meshgrid(x, x, indexing="ij")
    F = (np.exp(-(X - 0.3) ** 2 - 2 * Y**2) * (1 + X * Y))[:, :, None, None] * np.array([[1, 2j], [0, 1]])
    nF = np.abs(F).max()
    assert np.abs(sl.map_pi(A, grid, sl.map_iota(A, grid, F))).max() < 1e-8 * nF
    for ax in ("x", "y"):
        back = sl.homotopy_beta(A, grid, ax, sl.map_iota(A, grid, F))
        assert np.abs(back - F).max() < 1e-6 * nF
        whole = sl.map_iota(A, grid, sl.homotopy_beta(A, grid, ax, F)) + sl.sect_rho(
            A, grid, ax, sl.map_pi(A, grid, F)
        )
        assert np.abs(whole - F).max() < 1e-6 * nF


def test_suite_report():
    assert "exact-sequence-line" in sl.suite_names()
    report = sl.run_suite("operator-T", {"grid": {"N": 128}, "n_trials": 2})
    assert report["pass"]
    assert {c["id"] for c in report["checks"]} >= {"operator-T.inverse", "operator-T.eq4"}
    with pytest.raises(sl.UsageError):
        sl.run_suite("operator-T", {"bogus": 1})


def test_cli_exit_codes():
    code, out, _ = sl.run_cli(["list"])
    assert code == 0 and "bimodule" in out
    code, _, _ = sl.run_cli(["run", "--config", "/nonexistent/config.json"])
    assert code == 2
