import math
import os

import pytest

import plateforce as pf


def test_paper_baseline_forces():
    assert pf.casimir_zero_t(0.012, 5e-6) == pytest.approx(2.496241483099687e-08, rel=1e-13)
    assert pf.thermal_casimir(0.012, 5e-6, 300.0) == pytest.approx(3.803565795851495e-08, rel=1e-13)
    assert pf.plate_newton(3e3, 3e3, 0.012, 0.015, 0.015) == pytest.approx(1.0189956833848324e-08, rel=1e-13)
    es = pf.ElectrostaticConfig(0.1, 0.012, 5e-6)
    assert pf.electrostatic_force(es) == pytest.approx(2.125005075072e-05, rel=1e-12)
    assert pf.border_correction(0.01, 0.4, 1e-6, pf.FieldKind.Scalar) == pytest.approx(4.8e-6)


def test_types_validate():
    with pytest.raises(ValueError):
        pf.PlateGeometry(0.0, 1.0)
    with pytest.raises(ValueError):
        pf.ThermalModel(0.2)
    with pytest.raises(ValueError):
        pf.tilted_casimir(0.1, 0.12, 5e-6, 1e-4)
    g = pf.PlateGeometry(0.10, 0.12)
    assert g.area() == pytest.approx(0.012)
    assert g.perimeter() == pytest.approx(0.44)


def test_exclusion_scan_round_trip():
    spec = pf.ResolutionSpec(1e-12, 5e-6, 19.3e3, 19.3e3, 1e-5, 1e-5, 0.012)
    curves = pf.exclusion_scan(spec, 1e-6, 1e-2, 50, [0.3e-6, 1e-6, 3e-6, 10e-6])
    assert len(curves) == 4
    for upper, lower in zip(curves, curves[1:]):
        assert all(a > b for a, b in zip(upper.alpha_values, lower.alpha_values))
    for lam in curves[-1].lambda_grid:
        alpha = pf.alpha_bound(lam, spec)
        force = pf.plate_yukawa(19.3e3, 19.3e3, 0.012, 1e-5, 1e-5, 5e-6, pf.YukawaParams(alpha, lam))
        assert force == pytest.approx(1e-12, rel=1e-12)
    assert pf.alpha_bound(1e-5, spec) == pytest.approx(22.0133, rel=1e-5)


def test_budget_and_csv():
    cfg = pf.load_config(os.environ.get("PLATEFORCE_CONFIG", "configs/baseline.ini"))
    text = pf.budget_csv(cfg)
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    header, row = lines[0].split(","), [float(x) for x in lines[1].split(",")]
    ratio = row[header.index("electrostatic_to_casimir")]
    assert ratio == pytest.approx(851.28, rel=1e-4)
    assert "# constants: CODATA-2018" in text

    prior = pf.PriorBounds([(1e-6, 1e20), (1e-2, 1e-2)], "synthetic")
    excl = pf.exclusion_csv(cfg, 1e-6, 1e-2, 2, [1e-6], prior)
    assert "improvement" in excl
    with pytest.raises(ValueError):
        pf.parse_prior_bounds("1e-4,1\n1e-6,2\n")


def test_sensitivity_and_forces_csv():
    cfg = pf.ExperimentConfig()
    text = pf.sensitivity_csv(cfg)
    assert "tilted_to_flat" in text
    forces = pf.forces_csv(cfg, [3e-6, 5e-6])
    assert "# warning:" in forces
    k = pf.torsion_constant(pf.TorsionWire.tungsten(50e-6))
    assert k == pytest.approx(1.975767254796706e-07, rel=1e-12)
    assert math.isclose(pf.min_detectable_force(pf.BalanceConfig(1e-6, 0.1, 1e-9)), 1e-13, rel_tol=1e-12)
