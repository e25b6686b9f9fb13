"""Generalized zeta functions for the two statistics families.

The boson-like family uses g(q, z, order) = Sum_r [r]_q z^r / r^(order+1),
which reduces to the ordinary polylog-type g function at q = 1 (the [r]
cancels one power of r).  The fermion-like family uses the alternating
series f(x, order) = Sum_r (-1)^(r+1) x^r / r^order in the combined
argument x = z/q; for x > 1, where the series diverges, the standard
Fermi integral representation

    f(x, order) = (1/Gamma(order)) Int_0^inf t^(order-1)/(e^t/x + 1) dt

takes over.  The degenerate (large ln x) regime is also covered by an
asymptotic expansion whose first correction has coefficient pi^2/8.
"""

import math

from scipy.integrate import quad
from scipy.special import zeta as _riemann_zeta

from . import kernels
from .errors import ConvergenceError, DomainError
from .qcore import as_qparam
from .units import NATURAL

SOMMERFELD_MAX_TERMS = 8


def bose_g(q, z, order):
    """g(q, z, order) = Sum_{r>=1} [r]_q z^r / r^(order+1).

    Parameters
    ----------
    q : float or QParam
        Statistics parameter in (0, 1].
    z : float
        Fugacity; must satisfy 0 < z < q so the z/q sub-series converges.
    order : float
        Series order, typically 3/2 or 5/2.

    Returns
    -------
    float
        The sum, with relative truncation tolerance 1e-15.  Raises
        ConvergenceError if the tolerance is not met within the term cap.
    """
    qp = as_qparam(q)
    z = float(z)
    if not z > 0.0:
        raise DomainError(f"fugacity must be positive, got {z!r}")
    if qp.is_classical_limit:
        if z >= 1.0:
            raise DomainError(f"classical branch requires z < 1, got z={z!r}")
        return kernels.g_series_sum(1.0, z, float(order))
    if z >= qp.q:
        raise DomainError(
            f"series requires z < q (got z={z!r}, q={qp.q!r}); "
            "the z/q sub-series diverges otherwise"
        )
    return kernels.g_series_sum(qp.q, z, float(order))


def fermi_f(x, order, method="auto"):
    """f(x, order) = Sum_{r>=1} (-1)^(r+1) x^r / r^order, continued to x > 1.

    Parameters
    ----------
    x : float
        Combined argument z/q, any positive value.
    order : float
        Series order > 0.
    method : str
        "series" (accelerated alternating sum, valid for x <= 1),
        "integral" (Fermi integral by adaptive quadrature, any x > 0),
        or "auto" (series for x <= 1, integral beyond).

    The two routes agree on the overlap; continuity across x = 1 is part
    of the test suite.
    """
    x = float(x)
    order = float(order)
    if not x > 0.0:
        raise DomainError(f"argument must be positive, got {x!r}")
    if not order > 0.0:
        raise DomainError(f"order must be positive, got {order!r}")
    if method == "auto":
        method = "series" if x <= 1.0 else "integral"
    if method == "series":
        if x > 1.0:
            raise DomainError(f"alternating series diverges for x > 1 (x={x!r})")
        return kernels.f_series_sum(x, order)
    if method == "integral":
        return _fermi_integral(x, order)
    raise DomainError(f"unknown method {method!r}")


def _fd_integrand(u, ln_x, power):
    # integrand after t = u^2: u^power / (exp(u^2 - ln x) + 1)
    w = u * u - ln_x
    if w > 36.0:
        # tail where 1/(e^w + 1) equals e^-w to double precision
        return u ** power * math.exp(-w)
    return u ** power / (math.exp(w) + 1.0)


def _fermi_integral(x, order):
    ln_x = math.log(x)
    power = 2.0 * order - 1.0
    split = math.sqrt(max(ln_x, 1.0))
    head, err_head = quad(
        _fd_integrand, 0.0, split, args=(ln_x, power), epsabs=0.0, epsrel=1e-12
    )
    tail, err_tail = quad(
        _fd_integrand, split, math.inf, args=(ln_x, power), epsabs=1e-14, epsrel=1e-12
    )
    value = 2.0 * (head + tail) / math.gamma(order)
    err = 2.0 * (err_head + err_tail) / math.gamma(order)
    if not math.isfinite(value) or err > 1e-8 * max(1.0, abs(value)):
        raise ConvergenceError(
            f"Fermi integral quadrature failed at x={x!r}, order={order!r} "
            f"(error estimate {err:.3e})"
        )
    return value


def _dirichlet_eta(n):
    return (1.0 - 2.0 ** (1 - n)) * _riemann_zeta(n)


def sommerfeld_density_factor(ln_x, terms):
    """Degenerate-limit density bracket (ln x)^(3/2) (1 + pi^2/8 (ln x)^-2 + ...).

    ``terms`` counts bracket terms including the leading 1; the general
    term j carries 2 eta(2j) (3/2)(1/2)...(3/2 - 2j + 1) (ln x)^(-2j),
    which gives pi^2/8 for j = 1.  The expansion is asymptotic; at most
    SOMMERFELD_MAX_TERMS terms are supported.
    """
    ln_x = float(ln_x)
    if not ln_x > 0.0:
        raise DomainError(f"degenerate expansion requires ln x > 0, got {ln_x!r}")
    if terms < 1 or terms > SOMMERFELD_MAX_TERMS:
        raise DomainError(f"terms must be in 1..{SOMMERFELD_MAX_TERMS}, got {terms!r}")
    s = 1.5
    bracket = 1.0
    falling = 1.0
    for j in range(1, terms):
        falling *= (s - (2 * j - 2)) * (s - (2 * j - 1))
        bracket += 2.0 * _dirichlet_eta(2 * j) * falling * ln_x ** (-2 * j)
    return ln_x ** 1.5 * bracket


def thermal_wavelength(mass, temperature, units=NATURAL):
    """Thermal de Broglie wavelength h / sqrt(2 pi m k T)."""
    mass = float(mass)
    temperature = float(temperature)
    if not mass > 0.0 or not temperature > 0.0:
        raise DomainError("mass and temperature must be positive")
    return units.h / math.sqrt(2.0 * math.pi * mass * units.k * temperature)
