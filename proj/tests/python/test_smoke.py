"""Smoke tests for the python bindings."""

import math

import pytest

inls = pytest.importorskip("inls")


@pytest.fixture
def grid():
    return inls.make_grid(30.0, 1024)


@pytest.fixture
def params():
    return inls.make_params(4.0, 0.5)


def make_gaussian(grid):
    spec = inls.InitialSpec()
    spec.kind = inls.InitialKind.odd_gaussian
    return inls.sample_initial(spec, grid)


def test_params_derived_quantities(params):
    assert params.s_c == pytest.approx(0.125)
    assert params.mass_critical_alpha == pytest.approx(3.0)
    assert not params.scattering_warning


def test_grid_rejects_bad_inputs():
    with pytest.raises(ValueError):
        inls.make_grid(-1.0, 64)


def test_mass_closed_form(grid):
    u = make_gaussian(grid)
    assert inls.mass(u) == pytest.approx(math.sqrt(math.pi) / 2**2.5, rel=1e-9)


def test_free_propagation_is_unitary(grid):
    u = make_gaussian(grid)
    v = inls.free_propagate(u, 0.7)
    assert inls.mass(v) == pytest.approx(inls.mass(u), rel=1e-12)


def test_evolve_conserves_mass(grid, params):
    u = make_gaussian(grid)
    sched = inls.Schedule()
    sched.dt = 1e-2
    sched.t_max = 0.5
    sched.output_every = 10
    traj = inls.evolve(u, sched, params)
    masses = [s.mass for s in traj.samples]
    assert max(abs(m - masses[0]) for m in masses) <= 1e-10 * masses[0]
    energies = [s.e_total for s in traj.samples]
    assert max(abs(e - energies[0]) for e in energies) <= 1e-3 * energies[0]


def test_hardy_inequality(grid):
    u = make_gaussian(grid)
    rep = inls.hardy_ratio(u, 2.0)
    assert rep.ratio <= rep.sharp_constant
    assert rep.sharp_constant == pytest.approx(4.0)


def test_admissible_pairs():
    (pair,) = inls.admissible_pairs(0.125, [4.0])
    assert pair.q == pytest.approx(16.0)


def test_scaling_preserves_critical_norm(grid, params):
    u = make_gaussian(grid)
    before = inls.sobolev_norm(u, params.s_c, "homogeneous")
    v = inls.scale_state(u, 2.0, params)
    after = inls.sobolev_norm(v, params.s_c, "homogeneous")
    assert after == pytest.approx(before, rel=1e-10)


def test_checkpoint_roundtrip(tmp_path, grid):
    u = make_gaussian(grid)
    path = str(tmp_path / "state.bin")
    inls.save_checkpoint(u, path)
    v = inls.load_checkpoint(path)
    assert v.values == u.values
