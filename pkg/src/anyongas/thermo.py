"""Equations of state for the two anyon gas families.

State functions follow the ideal-gas structure U = (3/2) P V with the
generalized zeta functions supplying the q dependence:

    B family:  P = (kT/lam^3) g(q, z, 5/2),   N/V = g(q, z, 3/2)/lam^3
    F family:  P = gs (kT/lam^3) f(z/q, 5/2), N/V = gs f(z/q, 3/2)/lam^3

with lam the thermal wavelength and gs the multiplicity.  Natural units
h = k = 1 by default; the constants enter explicitly so SI checks work.
Virial coefficients are obtained by reverting the density-fugacity
series and composing it into the pressure series.
"""

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import ConvergenceError, DomainError
from .qcore import Family, PowerSeries, as_family, as_qparam, basic_number, jackson_derivative
from .qfunctions import bose_g, fermi_f, thermal_wavelength
from .units import NATURAL

FUGACITY_REL_TOL = 1e-12
FUGACITY_MAX_ITER = 200
_B_SUPREMUM_CUTOFF = 1e-6  # z is capped at q (1 - cutoff) when probing the boundary


@dataclass(frozen=True)
class GasParams:
    """Thermodynamic input for one equation-of-state evaluation.

    Exactly one of ``fugacity`` and ``density`` must be given; density
    means the dimensionless combination lam^3 N / V.  ``multiplicity``
    is the spin degeneracy factor (F family).  ``include_zero_mode``
    adds the isolated zero-momentum term to the grand potential only.
    """

    family: Family
    q: object
    temperature: float
    fugacity: float = None
    density: float = None
    mass: float = 1.0
    volume: float = 1.0
    multiplicity: int = 1
    units: object = NATURAL
    include_zero_mode: bool = False

    def __post_init__(self):
        object.__setattr__(self, "family", as_family(self.family))
        object.__setattr__(self, "q", as_qparam(self.q))
        if (self.fugacity is None) == (self.density is None):
            raise DomainError("give exactly one of fugacity and density")
        for name in ("temperature", "mass", "volume"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"{name} must be positive")
        if self.multiplicity < 1:
            raise DomainError("multiplicity must be a positive integer")

    def resolved_fugacity(self):
        if self.fugacity is not None:
            return float(self.fugacity)
        return solve_fugacity(self.family, self.q, float(self.density))


@dataclass(frozen=True)
class StateFunctions:
    """Equation-of-state outputs; extensive quantities use params.volume."""

    pressure: float
    internal_energy: float
    entropy: float
    number_density: float
    grand_potential: float
    fugacity: float
    thermal_wavelength: float

    def as_dict(self):
        return {
            "pressure": self.pressure,
            "internal_energy": self.internal_energy,
            "entropy": self.entropy,
            "number_density": self.number_density,
            "grand_potential": self.grand_potential,
            "fugacity": self.fugacity,
            "thermal_wavelength": self.thermal_wavelength,
        }


def b_state(params):
    """State functions of the boson-like gas; requires fugacity < q."""
    if params.family is not Family.B:
        raise DomainError("b_state needs B-family params")
    qp = params.q
    z = params.resolved_fugacity()
    lam = thermal_wavelength(params.mass, params.temperature, params.units)
    lam3 = lam ** 3
    kt = params.units.k * params.temperature
    g52 = bose_g(qp, z, 2.5)
    g32 = bose_g(qp, z, 1.5)
    pressure = kt * g52 / lam3
    return StateFunctions(
        pressure=pressure,
        internal_energy=1.5 * pressure * params.volume,
        entropy=params.volume * params.units.k / lam3
        * (2.5 * g52 - g32 * math.log(z)),
        number_density=g32 / lam3,
        grand_potential=-pressure * params.volume,
        fugacity=z,
        thermal_wavelength=lam,
    )


def f_state(params):
    """State functions of the fermion-like gas, any fugacity > 0.

    The multiplicity scales every extensive quantity (it multiplies the
    mode sum); the optional isolated zero-momentum term enters the grand
    potential only, never the bulk intensive functions.
    """
    if params.family is not Family.F:
        raise DomainError("f_state needs F-family params")
    qp = params.q
    z = params.resolved_fugacity()
    if not z > 0.0:
        raise DomainError(f"fugacity must be positive, got {z!r}")
    x = z if qp.is_classical_limit else z / qp.q
    lam = thermal_wavelength(params.mass, params.temperature, params.units)
    lam3 = lam ** 3
    kt = params.units.k * params.temperature
    gs = float(params.multiplicity)
    f52 = fermi_f(x, 2.5)
    f32 = fermi_f(x, 1.5)
    pressure = gs * kt * f52 / lam3
    grand_potential = -pressure * params.volume
    if params.include_zero_mode:
        grand_potential -= gs * kt * math.log1p(x)
    return StateFunctions(
        pressure=pressure,
        internal_energy=1.5 * pressure * params.volume,
        entropy=params.volume * gs * params.units.k / lam3
        * (2.5 * f52 - f32 * math.log(z)),
        number_density=gs * f32 / lam3,
        grand_potential=grand_potential,
        fugacity=z,
        thermal_wavelength=lam,
    )


def b_density_supremum(q):
    """Largest reachable lam^3 N/V for the B family (condensation analog).

    Evaluated just inside the boundary z -> q; densities at or above
    this value have no fugacity solution.
    """
    qp = as_qparam(q)
    z_top = (1.0 if qp.is_classical_limit else qp.q) * (1.0 - _B_SUPREMUM_CUTOFF)
    return bose_g(qp, z_top, 1.5)


def solve_fugacity(family, q, target_density):
    """Invert the density relation for z on the monotone branch.

    B family: g(q, z, 3/2) = target with z in (0, q); a target at or
    above the supremum raises DomainError.  F family: f(z/q, 3/2) =
    target, unbounded.  Bracketed root finding, relative residual 1e-12.
    """
    family = as_family(family)
    qp = as_qparam(q)
    target = float(target_density)
    if not target > 0.0:
        raise DomainError(f"target density must be positive, got {target!r}")
    q_top = 1.0 if qp.is_classical_limit else qp.q
    if family is Family.B:
        z_top = q_top * (1.0 - _B_SUPREMUM_CUTOFF)
        supremum = bose_g(qp, z_top, 1.5)
        if target >= supremum:
            raise DomainError(
                f"density {target!r} exceeds the condensation-analog supremum "
                f"{supremum:.12g} at q={qp.q!r}"
            )
        func = lambda z: bose_g(qp, z, 1.5) - target
        hi = min(target, z_top)  # g(z) >= z, so the root lies below target
    else:
        func = lambda z: fermi_f(z / q_top, 1.5) - target
        hi = max(target, 1.0)
        for _ in range(FUGACITY_MAX_ITER):
            if func(hi) > 0.0:
                break
            hi *= 2.0
        else:
            raise ConvergenceError("could not bracket the F-family fugacity")
    lo = min(1e-300, hi * 1e-6)
    z = brentq(func, lo, hi, xtol=1e-300, rtol=8.9e-16, maxiter=FUGACITY_MAX_ITER)
    if abs(func(z)) > FUGACITY_REL_TOL * target:
        raise ConvergenceError(
            f"fugacity solve stalled: residual {func(z):.3e} at z={z!r}"
        )
    return z


def _zeta_series(family, qp, order_exponent, n_coeffs):
    # fugacity-series coefficients of the density (exponent 5/2 or 3/2)
    # and pressure (7/2 or 5/2) sums, as a PowerSeries
    coeffs = []
    for r in range(1, n_coeffs + 1):
        if family is Family.B:
            c = basic_number(qp, r) / r ** order_exponent
        else:
            base = 1.0 if qp.is_classical_limit else qp.q_inv
            c = (-1.0) ** (r + 1) * base ** r / r ** order_exponent
        coeffs.append(c)
    return PowerSeries(tuple(coeffs))


def virial_coefficients(family, q, order):
    """Coefficients b_1..b_order of Pv/kT = 1 + b_2 (lam^3/v) + ...

    The density series in fugacity is reverted and substituted into the
    pressure series.  b_1 = 1 always; the F-family coefficients carry no
    q dependence (the deformation enters both series only through z/q).
    """
    family = as_family(family)
    qp = as_qparam(q)
    if order < 2:
        raise DomainError(f"virial expansion needs order >= 2, got {order!r}")
    if family is Family.B:
        density = _zeta_series(family, qp, 2.5, order)
        pressure = _zeta_series(family, qp, 3.5, order)
    else:
        density = _zeta_series(family, qp, 1.5, order)
        pressure = _zeta_series(family, qp, 2.5, order)
    z_of_x = density.revert()
    composed = pressure.compose(z_of_x)  # (Pv/kT) * x as a series in x
    return list(composed.coeffs[:order])


def fermi_energy(number_density, multiplicity, mass, units=NATURAL):
    """Fermi energy (3n/(4 pi gs))^(2/3) h^2/(2m) of the undeformed gas."""
    n = float(number_density)
    if not n > 0.0 or not mass > 0.0 or multiplicity < 1:
        raise DomainError("fermi_energy needs positive density, mass, multiplicity")
    return (3.0 * n / (4.0 * math.pi * multiplicity)) ** (2.0 / 3.0) \
        * units.h ** 2 / (2.0 * mass)


def chemical_potential_f(temperature, e_fermi, q, approximation_order=1,
                         units=NATURAL):
    """Degenerate-limit chemical potential of the F-family gas.

    Order 0: mu = E_F - kT ln(1/q); the deformation shifts mu linearly
    in T and the shift vanishes only at q = 1.  Order 1 adds the
    standard quadratic correction: mu = -kT ln(1/q) +
    E_F (1 - (pi^2/12)(kT/E_F)^2).
    """
    qp = as_qparam(q)
    t = float(temperature)
    if t < 0.0:
        raise DomainError(f"temperature must be nonnegative, got {t!r}")
    if not e_fermi > 0.0:
        raise DomainError(f"Fermi energy must be positive, got {e_fermi!r}")
    kt = units.k * t
    shift = -kt * math.log(qp.q_inv)
    if approximation_order == 0:
        return e_fermi + shift
    if approximation_order == 1:
        return shift + e_fermi * (1.0 - (math.pi ** 2 / 12.0) * (kt / e_fermi) ** 2)
    raise DomainError(f"approximation_order must be 0 or 1, got {approximation_order!r}")


def b_partition_log(spectrum, z, beta):
    """ln Z = -Sum_i ln(1 - z e^(-beta E_i)) over a discrete spectrum.

    Applying z D_q in the fugacity (Jackson derivative) yields the sum
    of b_occupation_jd over the modes; that identity is a library test.
    """
    z = float(z)
    beta = float(beta)
    total = 0.0
    for energy in spectrum:
        w = z * math.exp(-beta * energy)
        if w >= 1.0:
            raise DomainError(
                f"mode at energy {energy!r} has z e^(-beta E) = {w!r} >= 1"
            )
        total -= math.log1p(-w)
    return total


def f_partition_log(spectrum, z, beta, q):
    """ln Z = Sum_i ln(1 + (z/q) e^(-beta E_i)) over a discrete spectrum.

    The ordinary derivative z d/dz recovers the F-family occupation; in
    the dilute limit ln Z -> (z/q) Sum_i e^(-beta E_i), the Boltzmann
    form with the 1/q enhancement.
    """
    qp = as_qparam(q)
    z = float(z)
    if not z > 0.0:
        raise DomainError(f"fugacity must be positive, got {z!r}")
    base = z if qp.is_classical_limit else z / qp.q
    return sum(math.log1p(base * math.exp(-float(beta) * e)) for e in spectrum)


def b_number_from_partition(spectrum, z, beta, q, step=None):
    """z D_q(z) ln Z for the B-family partition log (mode-sum occupation)."""
    qp = as_qparam(q)
    return float(z) * jackson_derivative(
        lambda zz: b_partition_log(spectrum, zz, beta), qp, float(z), step=step
    )
