"""Semi-classical approximations for the trapped gas.

Three nested levels of approximation share one interface:

* ``SCINF`` - thermodynamic limit: N = g3(z)/tau^3, no finite-size term,
  no ground state.
* ``SC0``  - adds the first-order finite-size term (3 tau / 2) g2(z) to the
  atom number and (3 tau / 2) g_{1/2} to the density; still no ground state.
* ``SC``   - SC0 plus the explicit ground-state contribution z/(1-z) and
  its Gaussian density.

In an anisotropic trap the finite-size terms scale by the frequency ratio
(arithmetic mean over geometric mean), which is what ``aniso_ratio``
carries; tau is always defined through the geometric mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bose
from .errors import DomainError
from .models import ModelKind

_PI_32 = math.pi ** 1.5


@dataclass(frozen=True)
class ScVariant:
    """A semi-classical model tag plus its anisotropy scale factor."""

    kind: ModelKind
    aniso_ratio: float = 1.0

    def __post_init__(self) -> None:
        if self.kind == ModelKind.EX:
            raise DomainError("EX is not a semi-classical variant")
        if self.aniso_ratio < 1.0:
            raise DomainError(
                f"aniso ratio is an arithmetic/geometric mean ratio, must be >= 1, "
                f"got {self.aniso_ratio!r}"
            )


def _as_variant(variant) -> ScVariant:
    if isinstance(variant, ScVariant):
        return variant
    return ScVariant(ModelKind(variant))


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if not (tau > 0.0 and math.isfinite(tau)):
        raise DomainError(f"tau must be positive and finite, got {tau!r}")
    return tau


def population_sc_x(variant, x: float, tau: float) -> float:
    """Atom number at z = e^-x.  x = 0 is the saturated (z = 1) branch."""
    v = _as_variant(variant)
    tau = _check_tau(tau)
    if x < 0.0:
        raise DomainError(f"need x >= 0, got {x!r}")
    n = bose.bose_g_x(3.0, x) / tau**3
    if v.kind in (ModelKind.SC0, ModelKind.SC):
        n += 1.5 * v.aniso_ratio * bose.bose_g_x(2.0, x) / tau**2
    if v.kind == ModelKind.SC:
        if x == 0.0:
            raise DomainError("SC has a ground-state term; z = 1 is not admissible")
        n += 1.0 / math.expm1(x)
    return n


def population_sc(variant, z: float, tau: float) -> float:
    """Atom number N(z, tau) for a semi-classical variant, z in (0, 1]."""
    z = float(z)
    if not 0.0 < z <= 1.0:
        raise DomainError(f"fugacity must lie in (0, 1], got {z!r}")
    x = 0.0 if z == 1.0 else -math.log(z)
    return population_sc_x(variant, x, tau)


def saturated_population_sc(variant, tau: float) -> float:
    """Excited-state capacity at z = 1 (the saturation value)."""
    v = _as_variant(variant)
    tau = _check_tau(tau)
    n = bose.zeta_const(3.0) / tau**3
    if v.kind in (ModelKind.SC0, ModelKind.SC):
        n += 1.5 * v.aniso_ratio * bose.zeta_const(2.0) / tau**2
    return n


def density_sc_x(variant, x: float, tau: float, r):
    v = _as_variant(variant)
    tau = _check_tau(tau)
    if x < 0.0:
        raise DomainError(f"need x >= 0, got {x!r}")
    if x == 0.0 and v.kind != ModelKind.SCINF:
        raise DomainError(
            f"{v.kind.value} density is not defined at z = 1 "
            "(g_{1/2} diverges; the ground-state term is the cure)"
        )
    r_arr = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(r_arr < 0.0):
        raise DomainError("radius must be nonnegative")
    lam3 = (2.0 * math.pi * tau) ** 1.5
    x_local = x + 0.5 * tau * r_arr**2
    rho = np.array([bose.bose_g_x(1.5, xv) for xv in x_local]) / lam3
    if v.kind in (ModelKind.SC0, ModelKind.SC):
        g_half = np.array([bose.bose_g_x(0.5, xv) for xv in x_local])
        rho = rho + 1.5 * tau * v.aniso_ratio * g_half / lam3
    if v.kind == ModelKind.SC:
        rho = rho + (1.0 / math.expm1(x)) * np.exp(-(r_arr**2)) / _PI_32
    return rho if np.ndim(r) else float(rho[0])


def density_sc(variant, z: float, tau: float, r):
    """Density (sigma^-3) at radius r for a semi-classical variant.

    z = 1 is admitted only for SCINF, whose g_{3/2} profile stays finite;
    SC0 is refused there rather than regularized, and SC needs z < 1 for
    its ground-state term.
    """
    z = float(z)
    if not 0.0 < z <= 1.0:
        raise DomainError(f"fugacity must lie in (0, 1], got {z!r}")
    x = 0.0 if z == 1.0 else -math.log(z)
    return density_sc_x(variant, x, tau, r)


def condensate_fraction_sc(variant, atoms: float, temperature: float) -> float:
    """Ground-state fraction N0/N at temperature T (units hbar omega / k_B).

    SCINF and SC0 are exactly zero above their transition temperature and
    follow their saturation formulas below; SC solves its own constraint
    and is continuous through the transition.
    """
    v = _as_variant(variant)
    if atoms < 2:
        raise DomainError("need at least two atoms")
    if temperature <= 0.0:
        raise DomainError("temperature must be positive")
    tau = 1.0 / temperature
    if v.kind in (ModelKind.SCINF, ModelKind.SC0):
        capacity = saturated_population_sc(v, tau)
        return max(0.0, 1.0 - capacity / atoms)
    from . import core  # solver lives above this module

    state = core.solve_fugacity(v.kind, atoms, tau, aniso_ratio=v.aniso_ratio)
    return state.n0 / atoms


@dataclass(frozen=True)
class HighNAsymptotics:
    """Large-N expansion record for the threshold state."""

    tau_c: float
    x_star_first_order: float
    x_star_second_order: float
    degeneracy_limit: float


#: N-independent limit of the threshold degeneracy parameter rho(0) lambda^3:
#: zeta(3/2) from the saturated excited cloud plus 2 sqrt(2 zeta(2)) from the
#: ground-state peak.
DEGENERACY_LIMIT = bose.zeta_const(1.5) + 2.0 * math.sqrt(2.0 * bose.zeta_const(2.0))


def high_n_asymptotics(atoms: float) -> HighNAsymptotics:
    """Analytic large-N threshold quantities.

    The first-order x* uses the thermodynamic tau_c; the refined value
    evaluates the logarithmic correction at the finite-size transition
    point of the SC family and is slightly smaller for tau* < 1.
    """
    if atoms < 10:
        raise DomainError("asymptotics need at least 10 atoms")
    z2 = bose.zeta_const(2.0)
    tau_c = (bose.zeta_const(3.0) / atoms) ** (1.0 / 3.0)
    x1 = tau_c**1.5 / math.sqrt(z2)
    from . import core

    tau_sc = core.transition_temperature(ModelKind.SC, atoms).tau
    x2 = (
        tau_sc**1.5
        / math.sqrt(z2)
        * (1.0 + 9.0 / (8.0 * z2) * tau_sc * math.log(tau_sc))
    )
    return HighNAsymptotics(
        tau_c=tau_c,
        x_star_first_order=x1,
        x_star_second_order=x2,
        degeneracy_limit=DEGENERACY_LIMIT,
    )
