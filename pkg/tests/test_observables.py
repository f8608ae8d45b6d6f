import math

import numpy as np
import pytest

import trapgas as tg
from trapgas import observables as obs
from trapgas.core import GasState, ReducedUnits
from trapgas.errors import DomainError
from trapgas.models import ModelKind as M

PI32 = math.pi**1.5


def threshold_state(atoms, model=M.EX):
    units = tg.transition_temperature(model, atoms)
    return tg.solve_fugacity(model, atoms, units)


@pytest.fixture(scope="module")
def ex_1e4():
    return threshold_state(1e4)


@pytest.fixture(scope="module")
def ex_1e6():
    return threshold_state(1e6)


class TestProfile:
    def test_components_add_up(self, ex_1e4):
        grid = np.linspace(0.0, 12.0, 121)
        prof = tg.profile(ex_1e4, grid)
        recon = prof.ground + prof.first_excited + prof.other_excited
        assert np.allclose(recon, prof.total, rtol=1e-10, atol=0.0)
        peak = prof.total[0]
        for comp in (prof.ground, prof.first_excited, prof.other_excited):
            assert np.all(comp >= -1e-12 * peak)

    def test_first_excited_vanishes_at_origin(self, ex_1e4):
        prof = tg.profile(ex_1e4, np.linspace(0.0, 2.0, 5))
        assert prof.first_excited[0] == 0.0
        assert prof.first_excited[1] > 0.0

    @pytest.mark.parametrize("dims", [1, 2])
    def test_column_components_add_up(self, ex_1e4, dims):
        grid = np.linspace(0.0, 10.0, 41)
        prof = tg.profile(ex_1e4, grid, dims_integrated=dims)
        recon = prof.ground + prof.first_excited + prof.other_excited
        assert np.allclose(recon, prof.total, rtol=1e-10, atol=0.0)
        assert np.all(prof.other_excited >= 0.0)

    def test_first_excited_component_integrates_to_triple_level(self, ex_1e6):
        # the summed p-state shape carries the three degenerate states, so
        # the component integral is 3 N1 by construction, in every
        # projection mode
        occ1 = 1.0 / math.expm1(ex_1e6.x + ex_1e6.tau)
        grid = np.linspace(0.0, 10.0, 2001)
        weights = {
            0: 4.0 * math.pi * grid**2,  # radial 3D
            1: 2.0 * math.pi * grid,     # remaining plane
            2: 2.0,                      # remaining axis, both signs
        }
        for dims, w in weights.items():
            comp = obs.first_excited_level_density(ex_1e6, grid, dims)
            integral = np.trapezoid(w * comp, grid)
            assert integral == pytest.approx(9.0 * occ1, rel=1e-4)

    def test_ground_column_shapes(self, ex_1e4):
        for dims in (0, 1, 2):
            prof = tg.profile(ex_1e4, np.array([0.0]), dims_integrated=dims)
            expected = ex_1e4.n0 * math.pi ** (0.5 * dims) / PI32
            assert prof.ground[0] == pytest.approx(expected, rel=1e-12)

    def test_semiclassical_profiles(self):
        state = threshold_state(1e4, M.SC)
        grid = np.linspace(0.0, 6.0, 13)
        prof = tg.profile(state, grid)
        assert np.all(prof.first_excited == 0.0)
        assert np.allclose(
            prof.ground + prof.other_excited, prof.total, rtol=1e-12, atol=0.0
        )

    def test_condensed_scinf_refused(self):
        t_c = tg.transition_temperature(M.SCINF, 1e5).temperature
        state = tg.solve_fugacity(M.SCINF, 1e5, ReducedUnits.from_temperature(0.8 * t_c))
        with pytest.raises(DomainError):
            tg.profile(state, np.linspace(0.0, 4.0, 5))

    def test_scinf_profile_is_monotone(self):
        # uncondensed semi-classical cloud: no central dip, ever
        t_c = tg.transition_temperature(M.SCINF, 1e5).temperature
        state = tg.solve_fugacity(M.SCINF, 1e5, ReducedUnits.from_temperature(1.05 * t_c))
        grid = np.linspace(0.0, 8.0, 200)
        rho = obs.total_density(state, grid)
        assert np.all(np.diff(rho) < 0.0)

    def test_grid_validation(self, ex_1e4):
        with pytest.raises(DomainError):
            tg.profile(ex_1e4, np.array([0.0, -1.0]))
        with pytest.raises(DomainError):
            tg.profile(ex_1e4, np.array([0.0, 1.0]), dims_integrated=3)


class TestDip:
    def test_requires_exact_model(self):
        state = threshold_state(1e4, M.SC)
        with pytest.raises(DomainError):
            tg.dip_height(state)

    def test_positive_at_threshold(self, ex_1e6):
        assert tg.dip_height(ex_1e6) > 1.0

    def test_scales_like_inverse_tau(self):
        values = []
        for atoms in (1e5, 1e6, 1e7):
            state = threshold_state(atoms)
            values.append(tg.dip_height(state) * state.tau)
        spread = (max(values) - min(values)) / (sum(values) / len(values))
        print(f"dip*tau over 1e5..1e7: {values}, spread {spread:.3f}")
        assert spread < 0.15

    def test_first_excited_level_covers_dip(self, ex_1e6):
        # physical level-1 hump (component / 3) against the full dip
        dip = tg.dip_height(ex_1e6)
        occ1 = 1.0 / math.expm1(ex_1e6.x + ex_1e6.tau)
        hump = occ1 * 2.0 * math.exp(-1.0) / PI32
        assert hump / dip >= 0.8


class TestPeakReport:
    def test_scinf_threshold_is_classic_value(self):
        state = threshold_state(1e6, M.SCINF)
        report = tg.peak_report(state)
        assert report.degeneracy_parameter == pytest.approx(
            tg.zeta_const(1.5), rel=1e-9
        )
        assert report.peak_fraction == 0.0

    def test_fractions_bounded(self, ex_1e6):
        report = tg.peak_report(ex_1e6)
        assert 0.0 <= report.n0_fraction <= 1.0
        assert 0.0 <= report.peak_fraction <= 1.0
        assert report.degeneracy_parameter > 0.0
        assert report.rho0_peak == pytest.approx(ex_1e6.n0 / PI32, rel=1e-14)

    def test_peak_sharper_than_population(self):
        atoms = 1e6
        t_star = tg.transition_temperature(M.EX, atoms).temperature
        dt = 0.2

        def fractions(t):
            report = tg.peak_report(
                tg.solve_fugacity(M.EX, atoms, ReducedUnits.from_temperature(t))
            )
            return report.n0_fraction, report.peak_fraction

        n0_lo, pf_lo = fractions(t_star - dt)
        n0_hi, pf_hi = fractions(t_star + dt)
        ratio = abs(pf_hi - pf_lo) / abs(n0_hi - n0_lo)
        assert ratio > 5.0


class TestIntegratedFraction:
    def test_ordering_3d_above_columns(self, ex_1e4):
        report = tg.peak_report(ex_1e4)
        f1 = tg.integrated_peak_fraction(ex_1e4, 1)
        f2 = tg.integrated_peak_fraction(ex_1e4, 2)
        assert report.peak_fraction > f1 > f2 > 0.0

    def test_threshold_scaling(self, ex_1e4, ex_1e6):
        tau_ratio = ex_1e4.tau / ex_1e6.tau
        r1 = tg.integrated_peak_fraction(ex_1e4, 1) / tg.integrated_peak_fraction(
            ex_1e6, 1
        )
        r2 = tg.integrated_peak_fraction(ex_1e4, 2) / tg.integrated_peak_fraction(
            ex_1e6, 2
        )
        assert r1 == pytest.approx(math.sqrt(tau_ratio), rel=0.2)
        assert r2 == pytest.approx(tau_ratio, rel=0.2)

    def test_sc_supported_via_quadrature(self):
        state = threshold_state(1e3, M.SC)
        f1 = tg.integrated_peak_fraction(state, 1)
        assert 0.0 < f1 < 1.0

    def test_validation(self, ex_1e4):
        with pytest.raises(DomainError):
            tg.integrated_peak_fraction(ex_1e4, 3)
        scinf = threshold_state(1e3, M.SCINF)
        with pytest.raises(DomainError):
            tg.integrated_peak_fraction(scinf, 1)


class TestDensityMoment:
    def test_pure_ground_state_gaussian_moments(self):
        # z -> 0: the cloud is the bare oscillator ground state, whose
        # Gaussian moments integrate in closed form
        state = tg.solve_fugacity(M.EX, 1e-8, 12.0)
        n0 = state.n0
        m2 = tg.density_moment(state, 2)
        m3 = tg.density_moment(state, 3)
        assert m2 == pytest.approx(n0**2 / (2.0 * math.pi) ** 1.5, rel=1e-3)
        assert m3 == pytest.approx(n0**3 / (math.pi**3 * 27.0**0.5), rel=1e-3)

    def test_scinf_threshold_moment_finite(self):
        state = threshold_state(1e5, M.SCINF)
        m2 = tg.density_moment(state, 2)
        assert m2 > 0.0
        grid = np.linspace(1e-4, 8.0 / math.sqrt(state.tau), 4001)
        rho = np.asarray(obs.total_density(state, grid))
        riemann = np.trapezoid(4.0 * math.pi * grid**2 * rho**2, grid)
        assert m2 == pytest.approx(riemann, rel=1e-3)

    def test_moment_ratio_against_sc0(self, ex_1e6):
        # EX against SC0 at the same fugacity and temperature; the excess
        # peaks well below N = 1e6 (see the acceptance notes)
        for atoms, p, lo, hi in [(1e5, 3, 0.15, 0.35), (1e4, 2, 0.10, 0.20)]:
            state = threshold_state(atoms)
            twin = GasState(model=M.SC0, atoms=atoms, tau=state.tau, x=state.x, n0=0.0)
            ratio = tg.density_moment(state, p) / tg.density_moment(twin, p) - 1.0
            print(f"moment ratio N={atoms:.0e} p={p}: {ratio:+.4f}")
            assert lo < ratio < hi

    def test_validation(self, ex_1e4):
        with pytest.raises(DomainError):
            tg.density_moment(ex_1e4, 4)
