import numpy as np
import pytest

from torusdual import oscillator as osc

PI4 = 4.0 * np.pi


def test_staggered_stencil_entries():
    # derivative block: two-point +-1/h; position block: averaged products
    disc = osc.build_q0(1, 5, 6.0, enforce_ranges=False)
    n = 5
    y = disc.nodes
    h = y[1] - y[0]
    a = disc.q[n:, :n]  # node -> midpoint block
    for i in range(n - 1):
        assert a[i, i] == pytest.approx(-1.0 / h + np.pi * y[i])
        assert a[i, i + 1] == pytest.approx(1.0 / h + np.pi * y[i + 1])
        for j in range(n):
            if j not in (i, i + 1):
                assert a[i, j] == 0.0


def test_collocated_stencil_entries():
    # the naive same-grid variant: row i carries -1/(2h), 2 pi y_i, +1/(2h)
    disc = osc.build_q0(1, 3, 6.0, enforce_ranges=False, scheme="collocated")
    n = 3
    y = disc.nodes
    h = y[1] - y[0]
    lower = disc.q[n:, :n]
    assert lower[1, 0] == pytest.approx(-1.0 / (2 * h))
    assert lower[1, 1] == pytest.approx(2 * np.pi * y[1])
    assert lower[1, 2] == pytest.approx(1.0 / (2 * h))


def test_collocated_spectrum_doubles():
    # squared singular values land in both grading sectors, so the naive
    # scheme sees the kernel twice; this is why the spectral checks run
    # on the staggered assembly
    disc = osc.build_q0(1, 300, 6.0, scheme="collocated")
    qsq = disc.q @ disc.q
    import scipy.linalg

    vals = scipy.linalg.eigh(qsq, eigvals_only=True, subset_by_index=[0, 3])
    assert vals[0] < 1e-8 and vals[1] < 1e-8


def test_q_symmetric_and_square_psd():
    disc = osc.build_q0(1, 200, 6.0)
    assert np.max(np.abs(disc.q - disc.q.T)) == 0.0
    qsq = disc.q @ disc.q
    assert np.max(np.abs(qsq - qsq.T)) < 1e-10
    vals = np.linalg.eigvalsh(qsq)
    assert vals.min() > -1e-8


def test_grading_commutation():
    disc = osc.build_q0(1, 200, 6.0)
    g = np.diag(disc.grading)
    assert np.max(np.abs(g @ disc.q + disc.q @ g)) == 0.0
    qsq = disc.q @ disc.q
    assert np.max(np.abs(g @ qsq - qsq @ g)) == 0.0


def test_grading_commutation_2d():
    disc = osc.build_q0(2, 20, 4.0)
    import scipy.sparse as sp

    g = sp.diags(disc.grading)
    assert abs(g @ disc.q + disc.q @ g).max() == 0.0
    qsq = disc.q @ disc.q
    assert abs(g @ qsq - qsq @ g).max() == 0.0
    assert abs(disc.q - disc.q.T).max() == 0.0


def test_1d_spectrum_grid_400():
    report = osc.spectral_check(osc.build_q0(1, 400, 6.0))
    for lam, expect in zip(report.eigenvalues, report.expected):
        if expect == 0.0:
            assert abs(lam) < 0.01 * PI4
        else:
            assert abs(lam - expect) < 0.01 * expect
    assert report.kernel_dim == 1
    assert report.kernel_even_fraction > 0.999
    assert report.kernel_cosine > 0.999
    assert report.residual_max <= 1e-8 * report.operator_norm_estimate


def test_1d_convergence_is_monotone():
    # the first excited level is exact up to roundoff for this stencil;
    # the deviation of the higher levels shrinks as the grid refines
    targets = [PI4 * k for k in (2, 3)]
    devs = []
    for n in (200, 400, 800):
        report = osc.spectral_check(osc.build_q0(1, n, 6.0))
        assert abs(report.eigenvalues[1] - PI4) < 1e-9
        got = [report.eigenvalues[3], report.eigenvalues[5]]
        devs.append([abs(g - t) for g, t in zip(got, targets)])
    for level in range(2):
        assert devs[0][level] > devs[1][level] > devs[2][level]


def test_kernel_stable_across_halfwidths():
    for halfwidth in (5.0, 6.0, 7.0):
        report = osc.spectral_check(osc.build_q0(1, 400, halfwidth))
        assert report.kernel_dim == 1
        assert report.kernel_cosine > 0.999


def test_2d_spectrum_small_grid():
    report = osc.spectral_check(osc.build_q0(2, 40, 4.0))
    expected = report.expected
    assert list(expected[:6]) == [0.0, PI4, PI4, PI4, PI4, 2 * PI4]
    assert abs(report.eigenvalues[0]) < 0.04 * PI4
    for lam, expect in zip(report.eigenvalues[1:], expected[1:]):
        assert abs(lam - expect) < 0.04 * expect
    assert report.kernel_dim == 1
    assert report.kernel_even_fraction > 0.999
    assert report.kernel_cosine > 0.99


def test_expected_levels_patterns():
    lv1 = osc.expected_levels(1, 10) / PI4
    assert list(lv1) == [0, 1, 1, 2, 2, 3, 3, 4, 4, 5]
    lv2 = osc.expected_levels(2, 13) / PI4
    assert list(lv2) == [0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2]


def test_parameter_validation():
    with pytest.raises(ValueError):
        osc.build_q0(3, 100, 6.0)
    with pytest.raises(ValueError):
        osc.build_q0(1, 100, 6.0)  # grid below the production range
    with pytest.raises(ValueError):
        osc.build_q0(1, 400, 3.0)  # halfwidth below range
    with pytest.raises(ValueError):
        osc.build_q0(2, 400, 6.0)  # 2D grid above range
    with pytest.raises(ValueError):
        osc.build_q0(1, 400, 6.0, scheme="spectral")
    with pytest.raises(ValueError):
        osc.build_q0(2, 40, 6.0, scheme="collocated")
    osc.build_q0(1, 5, 6.0, enforce_ranges=False)


def test_report_json():
    report = osc.spectral_check(osc.build_q0(1, 200, 6.0), count=4)
    payload = osc.spectral_report_to_json(report)
    assert payload["dim"] == 1 and payload["grid"] == 200
    assert payload["kernel_parity"] == "even"
    assert len(payload["eigenvalues"]) == 4
    assert set(payload) == {
        "dim", "grid", "halfwidth", "eigenvalues", "expected", "kernel_dim",
        "kernel_parity", "kernel_even_fraction", "kernel_cosine", "residual_max",
    }
