"""Unit systems: Planck and Boltzmann constants used by the gas formulas.

Natural units h = k = 1 are the default everywhere; SI values are
provided for desk checks against tabulated numbers (CODATA 2018 exact
values).
"""

from dataclasses import dataclass

PLANCK_SI = 6.62607015e-34  # J s
BOLTZMANN_SI = 1.380649e-23  # J / K
ELECTRON_MASS_SI = 9.1093837015e-31  # kg
ELECTRON_VOLT_SI = 1.602176634e-19  # J


@dataclass(frozen=True)
class UnitSystem:
    h: float = 1.0
    k: float = 1.0

    @classmethod
    def natural(cls):
        return cls()

    @classmethod
    def si(cls):
        return cls(h=PLANCK_SI, k=BOLTZMANN_SI)


NATURAL = UnitSystem()
SI = UnitSystem.si()
