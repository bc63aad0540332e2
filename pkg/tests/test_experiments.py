import numpy as np
import pytest
from numpy.testing import assert_allclose

from graspa import (
    ExperimentConfig,
    Interval,
    PiecewiseDomain,
    bg_chebyshev_nodes,
    build_figure,
    build_interpolant,
    equispaced_nodes,
    f1,
    f2,
    kte,
    method_chain,
    affine_to_reference,
    partition_nodes,
    rmae,
    run_comparison,
    vn_correction,
)

DOM1 = PiecewiseDomain(Interval(-1, 1), (0.0,))


def test_f1_spot_values():
    assert f1(-0.5) == 0.5                      # the quadratic vanishes there
    assert_allclose(f1(0.0), -6.0 / 13.0, rtol=1e-15)   # left branch at the jump
    assert_allclose(f1(0.5), np.sin(1.0) * np.cos(1.5) + 0.5, rtol=1e-15)
    assert_allclose(f1(0.5), 0.5595233027498767, rtol=1e-12)


def test_f2_spot_values():
    assert f2(-0.75) == 0.5
    assert f2(0.25) == 0.0
    assert_allclose(f2(0.75), np.sin(1.5) * np.cos(2.25) + 0.5, rtol=1e-15)
    assert_allclose(f2(0.75), -0.12660003938283904, rtol=1e-12)
    # branch selection at the jumps follows the left-closed rule
    assert_allclose(f2(-0.5), 1.0 / 26.0 - 0.5, rtol=1e-15)
    assert f2(0.0) == 0.5
    assert f2(0.5) == 1.0


def test_f1_jump_at_zero():
    eps = 1e-12
    assert abs(f1(0.0) - f1(eps)) > 0.9


def test_rmae_trivial_cases():
    grid = np.linspace(-1, 1, 50)
    exact = build_interpolant(equispaced_nodes(3), f1(equispaced_nodes(3).nodes))
    assert rmae(lambda x: np.asarray(f1(x)), f1(grid), grid) == 0.0
    assert_allclose(rmae(lambda x: np.full_like(np.asarray(x), 0.9),
                         np.ones_like(grid), grid), 0.1, rtol=1e-15)
    with pytest.raises(ValueError):
        rmae(exact, np.zeros_like(grid), grid)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(function="f3")
    with pytest.raises(ValueError):
        ExperimentConfig(kappa=0.0)
    with pytest.raises(ValueError):
        ExperimentConfig(methods=())
    with pytest.raises(ValueError):
        ExperimentConfig(methods=("classical", "resample"))
    with pytest.raises(ValueError):
        ExperimentConfig(n_values=(0,))
    cfg = ExperimentConfig(function="f2")
    assert cfg.cuts == (-0.5, 0.0, 0.5)
    assert cfg.n_values == (13, 29, 41)   # the 4j+1 schedule is the default
    assert ExperimentConfig(function="f1").n_values == (11, 23, 51)


def test_config_json_roundtrip():
    cfg = ExperimentConfig(function="f2", n_values=(13, 29), kappa=500.0,
                           methods=("sgibbs", "graspa"), rmae_grid=100)
    again = ExperimentConfig.from_json_dict(cfg.to_json_dict())
    assert again == cfg
    with pytest.raises(ValueError):
        ExperimentConfig.from_json_dict({"function": "f1", "grid": 10})


def test_vn_misuse_is_a_hard_error():
    cfg = ExperimentConfig(function="f1", n_values=(11,), methods=("graspa+vn",))
    with pytest.raises(ValueError):
        run_comparison(cfg)  # odd degree
    with pytest.raises(ValueError):
        run_comparison(ExperimentConfig(function="f2", n_values=(8,),
                                        methods=("graspa+vn",)))  # three cuts


def test_comparison_f1_ordering_and_exactness():
    cfg = ExperimentConfig(function="f1", n_values=(23,),
                           methods=("classical", "sgibbs", "graspa"))
    res = run_comparison(cfg)
    errs = {m: res.cell(m, 23).rmae for m in cfg.methods}
    assert errs["graspa"] < errs["sgibbs"] < errs["classical"]


def test_interpolation_conditions_survive_pipeline():
    for fn, function, n in ((f1, "f1", 23), (f2, "f2", 29)):
        cfg = ExperimentConfig(function=function, n_values=(n,),
                               methods=("sgibbs", "graspa"))
        nodes = equispaced_nodes(n)
        values = fn(nodes.nodes)
        for m in cfg.methods:
            chain = method_chain(m, cfg.domain(), cfg.kappa, n)
            interp = build_interpolant(nodes, values, chain)
            assert np.max(np.abs(interp(nodes.nodes) - values)) == 0.0


def test_comparison_is_deterministic():
    cfg = ExperimentConfig(function="f1", n_values=(11, 23),
                           methods=("classical", "graspa"))
    a = run_comparison(cfg)
    b = run_comparison(cfg)
    assert a.cells == b.cells
    for key in a.samples:
        assert np.array_equal(a.samples[key], b.samples[key])


def test_graspa_rmae_improves_monotonically_f1():
    cfg = ExperimentConfig(function="f1", n_values=(11, 23, 51), methods=("graspa",))
    res = run_comparison(cfg)
    e11, e23, e51 = (res.cell("graspa", n).rmae for n in (11, 23, 51))
    assert e51 < e23 < e11


def test_odd_sweep_node_images_follow_bg_chebyshev():
    # mapped node images per side sit on the (0, 2/n) and (2/n, 0) families
    for n in (11, 23, 51):
        part = partition_nodes(equispaced_nodes(n), DOM1)
        m = part.cardinalities[0]
        offs = 2.0 / n
        u1 = np.sort(kte(1.0, affine_to_reference(part.parts[0], 1, DOM1)))
        u2 = np.sort(kte(1.0, affine_to_reference(part.parts[1], 2, DOM1)))
        assert_allclose(u1, bg_chebyshev_nodes(m - 1, 0.0, offs).nodes, atol=1e-12)
        assert_allclose(u2, bg_chebyshev_nodes(m - 1, offs, 0.0).nodes, atol=1e-12)


def test_even_split_node_correction_offsets():
    # the correction halves the first gap: the realized left offset drops from
    # 4/n to exactly 2/(n-1) (the right endpoint stays pinned at 1)
    for n in (8, 16, 32):
        part = partition_nodes(equispaced_nodes(n), DOM1)
        x2 = part.parts[1]
        u_plain = np.sort(kte(1.0, affine_to_reference(x2, 2, DOM1)))
        u_vn = np.sort(kte(1.0, affine_to_reference(
            vn_correction(n, DOM1, x2), 2, DOM1)))
        assert_allclose(u_plain, bg_chebyshev_nodes(n // 2 - 1, 4.0 / n, 0.0).nodes,
                        atol=1e-12)
        assert_allclose(u_vn, bg_chebyshev_nodes(n // 2 - 1, 2.0 / (n - 1), 0.0).nodes,
                        atol=1e-12)


def test_overflowing_cells_are_flagged_not_fatal():
    # a shift so large that the mapped nodes collapse in floating point
    cfg = ExperimentConfig(function="f1", n_values=(11,), methods=("sgibbs",),
                           kappa=1e300)
    res = run_comparison(cfg)
    cell = res.cell("sgibbs", 11)
    assert not cell.ok and np.isnan(cell.rmae) and np.isnan(cell.lebesgue)
    assert cell.note


def test_fixed_shift_divergence_onset_f2():
    # with the shift held at 1e4, the growth of the cross-subinterval factors
    # eventually beats the shift suppression: per-step growth jumps from a few
    # percent to nearly 3x past the onset
    cfg = ExperimentConfig(function="f2", n_values=(41, 77, 81, 85, 89, 93),
                           methods=("graspa",))
    res = run_comparison(cfg)
    lam = {n: res.cell("graspa", n).lebesgue for n in cfg.n_values}
    assert lam[81] / lam[77] < 1.1
    assert lam[89] / lam[85] > 2.0
    assert lam[93] > 10.0 * lam[41]


def test_figure_tables_schema():
    (fig2,) = build_figure("fig2")
    assert fig2.header == ("n", "lambda_classical", "lambda_sgibbs", "lambda_graspa")
    assert fig2.rows.shape == (11, 4)
    (fig3bis,) = build_figure("fig3bis")
    assert fig3bis.header == ("n", "rmae_classical", "rmae_sgibbs", "rmae_graspa")
    fig4, fig4_vn = build_figure("fig4")
    assert fig4.kind == "matrix" and fig4.rows.shape == (51, 100)
    assert fig4_vn.rows.shape == (51, 100)
    (fig9,) = build_figure("fig9")
    assert fig9.header == ("n", "lambda_graspa")
    assert fig9.rows[-1, 0] == 89.0
    with pytest.raises(ValueError):
        build_figure("fig10")
