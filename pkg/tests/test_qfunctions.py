import math

import mpmath
import numpy as np
import pytest

from anyongas.errors import DomainError
from anyongas.qcore import basic_number
from anyongas.qfunctions import (bose_g, fermi_f, sommerfeld_density_factor,
                                 thermal_wavelength)
from anyongas.units import SI, ELECTRON_MASS_SI, ELECTRON_VOLT_SI


class TestBoseG:
    def test_classical_against_large_reference_sum(self):
        r = np.arange(1, 1_000_001, dtype=float)
        reference = float(np.sum(0.5 ** r / r ** 1.5))
        assert bose_g(1.0, 0.5, 1.5) == pytest.approx(reference, abs=1e-10)

    def test_classical_against_polylog(self):
        for z in (0.1, 0.5, 0.9):
            for order in (1.5, 2.5):
                want = float(mpmath.polylog(order, z))
                assert bose_g(1.0, z, order) == pytest.approx(want, rel=1e-10)

    def test_series_opening(self):
        # z + [2]/2^(5/2) z^2 + [3]/3^(5/2) z^3 + O(z^4)
        q, z = 0.6, 1e-4
        opening = (z + basic_number(q, 2) / 2 ** 2.5 * z ** 2
                   + basic_number(q, 3) / 3 ** 2.5 * z ** 3)
        assert bose_g(q, z, 1.5) == pytest.approx(opening, rel=1e-12)

    def test_term_coefficients_match_basic_numbers(self):
        # the r-th coefficient is basic_number(q, r)/r^(order+1); z kept
        # small enough that 400 explicit terms cover the sum and the
        # basic numbers stay inside double range
        for q in (0.3, 0.7, 0.95):
            for z_frac in (0.2, 0.5):
                z = z_frac * q
                want = sum(basic_number(q, r) * z ** r / r ** 2.5
                           for r in range(1, 401))
                assert bose_g(q, z, 1.5) == pytest.approx(want, rel=1e-13)

    def test_monotone_in_z(self):
        values = [bose_g(0.7, z, 1.5) for z in (0.1, 0.3, 0.5, 0.65)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            bose_g(0.7, 0.7, 1.5)
        with pytest.raises(DomainError):
            bose_g(0.7, 0.9, 1.5)
        with pytest.raises(DomainError):
            bose_g(0.7, 0.0, 1.5)
        with pytest.raises(DomainError):
            bose_g(1.0, 1.0, 1.5)

    def test_finite_near_boundary(self):
        value = bose_g(0.5, 0.5 * (1 - 1e-6), 1.5)
        assert math.isfinite(value)


class TestFermiF:
    def test_alternating_harmonic(self):
        assert fermi_f(1.0, 1.0) == pytest.approx(math.log(2.0), abs=1e-14)

    def test_small_argument_leading_term(self):
        x = 1e-6
        assert fermi_f(x, 1.5) == pytest.approx(x, rel=1e-5)

    def test_frozen_polylog_values(self):
        # -Li_order(-x) via 25-digit arithmetic
        cases = {
            (0.5, 1.5): 0.4298873215805793,
            (1.0, 1.5): 0.7651470246254079,
            (1.0, 2.5): 0.8671998890121841,
            (2.0, 1.5): 1.2813803831597696,
            (10.0, 1.5): 3.2856840823338928,
            (3.0, 2.5): 2.1627007120020567,
        }
        for (x, order), want in cases.items():
            assert fermi_f(x, order) == pytest.approx(want, rel=1e-11)

    def test_series_and_integral_agree_on_overlap(self):
        for x in np.linspace(0.5, 1.0, 11):
            a = fermi_f(float(x), 1.5, method="series")
            b = fermi_f(float(x), 1.5, method="integral")
            assert a == pytest.approx(b, abs=1e-8)

    def test_continuous_across_switch(self):
        below = fermi_f(1.0 - 1e-9, 1.5)
        above = fermi_f(1.0 + 1e-9, 1.5)
        assert abs(below - above) < 1e-8

    def test_strictly_increasing(self):
        values = [fermi_f(x, 1.5) for x in (0.2, 0.9, 1.5, 4.0, 40.0)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_degenerate_regime_against_asymptotics(self):
        got = fermi_f(math.exp(10.0), 1.5)
        asym = sommerfeld_density_factor(10.0, 2) / math.gamma(2.5)
        assert abs(got - asym) / got < 1e-3

    def test_domain_and_methods(self):
        with pytest.raises(DomainError):
            fermi_f(-1.0, 1.5)
        with pytest.raises(DomainError):
            fermi_f(0.5, -1.0)
        with pytest.raises(DomainError):
            fermi_f(2.0, 1.5, method="series")
        with pytest.raises(DomainError):
            fermi_f(0.5, 1.5, method="nope")


class TestSommerfeld:
    def test_leading_term(self):
        assert sommerfeld_density_factor(10.0, 1) == pytest.approx(
            10.0 ** 1.5, rel=1e-15)

    def test_first_correction(self):
        # 10^(3/2) (1 + pi^2/800)
        assert sommerfeld_density_factor(10.0, 2) == pytest.approx(
            32.0129069705871, abs=1e-12)

    def test_agreement_with_quadrature(self):
        ln_x = 20.0
        quad_value = fermi_f(math.exp(ln_x), 1.5, method="integral")
        asym = sommerfeld_density_factor(ln_x, 2) / math.gamma(2.5)
        assert abs(asym - quad_value) / quad_value < 1e-4

    def test_more_terms_improve(self):
        ln_x = 15.0
        truth = fermi_f(math.exp(ln_x), 1.5, method="integral") * math.gamma(2.5)
        err = [abs(sommerfeld_density_factor(ln_x, t) - truth) for t in (1, 2, 3)]
        assert err[0] > err[1] > err[2]

    def test_domain(self):
        with pytest.raises(DomainError):
            sommerfeld_density_factor(-1.0, 2)
        with pytest.raises(DomainError):
            sommerfeld_density_factor(10.0, 0)
        with pytest.raises(DomainError):
            sommerfeld_density_factor(10.0, 99)


class TestThermalWavelength:
    def test_normalization_point(self):
        assert thermal_wavelength(1.0, 1.0 / (2.0 * math.pi)) == pytest.approx(
            1.0, rel=1e-15)

    def test_scaling_law(self):
        assert thermal_wavelength(1.0, 1.0) / thermal_wavelength(1.0, 4.0) \
            == pytest.approx(2.0, rel=1e-15)

    def test_electron_at_room_temperature(self):
        lam = thermal_wavelength(ELECTRON_MASS_SI, 300.0, SI)
        assert lam == pytest.approx(4.30347543959521e-09, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            thermal_wavelength(0.0, 300.0)
        with pytest.raises(DomainError):
            thermal_wavelength(1.0, -1.0)
