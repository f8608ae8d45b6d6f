"""Trap and state records plus the nonlinear solvers shared by all models.

Units convention: the isotropic trap frequency omega fixes everything.
Lengths are in sigma = sqrt(hbar / m omega), temperatures in hbar omega/k_B
(so tau = hbar omega / k_B T is the inverse reduced temperature), densities
in sigma^-3.  The thermal wavelength obeys lambda^3 = (2 pi tau)^{3/2}
sigma^3 exactly.

One fugacity convention is used for every model: z = e^{beta (mu - eps0)},
so z is always in (0, 1) and the ground-state population is exactly
z/(1-z).  Solvers work in x = -ln z, which keeps N0 = 1/(e^x - 1) accurate
arbitrarily close to saturation where z itself would round to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import exact, semiclassical
from .bose import zeta_const
from .errors import ConvergenceError, DomainError
from .exact import DEFAULT_CONTROL, LSumControl
from .models import ModelKind
from .roots import solve_monotone_root

__all__ = [
    "GasState",
    "ModelKind",
    "ReducedUnits",
    "TrapSpec",
    "population_total",
    "saturated_population",
    "solve_fugacity",
    "solve_monotone_root",
    "transition_temperature",
]

_FUGACITY_RESIDUAL = 1e-10


@dataclass(frozen=True)
class TrapSpec:
    """Trap geometry.  ``frequencies`` switches on anisotropy.

    All results are expressed in units of the (geometric-mean) frequency,
    so ``omega`` only documents the physical scale; the anisotropy enters
    through the ratio of arithmetic to geometric mean frequency.
    """

    omega: float = 1.0
    frequencies: tuple[float, float, float] | None = None

    def __post_init__(self) -> None:
        if self.omega <= 0.0:
            raise DomainError("trap frequency must be positive")
        if self.frequencies is not None:
            if len(self.frequencies) != 3 or any(f <= 0.0 for f in self.frequencies):
                raise DomainError("anisotropy needs three positive frequencies")

    @property
    def is_isotropic(self) -> bool:
        if self.frequencies is None:
            return True
        wx, wy, wz = self.frequencies
        return wx == wy == wz

    @property
    def omega_bar(self) -> float:
        """Geometric mean frequency (sets tau and sigma)."""
        if self.frequencies is None:
            return self.omega
        wx, wy, wz = self.frequencies
        if wx == wy == wz:
            return wx
        return (wx * wy * wz) ** (1.0 / 3.0)

    @property
    def omega_tilde(self) -> float:
        """Arithmetic mean frequency (scales the finite-size term)."""
        if self.frequencies is None:
            return self.omega
        return sum(self.frequencies) / 3.0

    @property
    def aniso_ratio(self) -> float:
        if self.is_isotropic:
            return 1.0
        # AM/GM >= 1; clamp float noise
        return max(1.0, self.omega_tilde / self.omega_bar)


@dataclass(frozen=True)
class ReducedUnits:
    """A temperature point in trap units, tau = hbar omega / k_B T."""

    tau: float

    def __post_init__(self) -> None:
        if not (self.tau > 0.0 and math.isfinite(self.tau)):
            raise DomainError(f"tau must be positive and finite, got {self.tau!r}")

    @classmethod
    def from_temperature(cls, temperature: float) -> "ReducedUnits":
        if temperature <= 0.0:
            raise DomainError("temperature must be positive")
        return cls(1.0 / temperature)

    @property
    def temperature(self) -> float:
        """T in units of hbar omega / k_B."""
        return 1.0 / self.tau

    @property
    def lambda3(self) -> float:
        """Thermal de Broglie volume lambda^3 in sigma^3 units."""
        return (2.0 * math.pi * self.tau) ** 1.5


@dataclass(frozen=True)
class GasState:
    """A resolved thermodynamic point of one model.

    ``x`` is -ln z (0 for the saturated branch of SCINF/SC0); ``n0`` is the
    ground-state population, assigned by the condensate formula when the
    state is flagged condensed.
    """

    model: ModelKind
    atoms: float
    tau: float
    x: float
    n0: float
    condensed: bool = False
    aniso_ratio: float = 1.0

    @property
    def z(self) -> float:
        return math.exp(-self.x)

    @property
    def temperature(self) -> float:
        return 1.0 / self.tau

    @property
    def units(self) -> ReducedUnits:
        return ReducedUnits(self.tau)

    @property
    def lambda3(self) -> float:
        return (2.0 * math.pi * self.tau) ** 1.5


def _as_tau(tau) -> float:
    if isinstance(tau, ReducedUnits):
        return tau.tau
    tau = float(tau)
    if not (tau > 0.0 and math.isfinite(tau)):
        raise DomainError(f"tau must be positive and finite, got {tau!r}")
    return tau


def _resolve_ratio(model: ModelKind, trap: TrapSpec | None, aniso_ratio: float | None):
    if trap is not None and aniso_ratio is not None:
        raise DomainError("pass either a trap or an explicit aniso ratio, not both")
    if trap is not None:
        ratio = trap.aniso_ratio
    else:
        ratio = 1.0 if aniso_ratio is None else float(aniso_ratio)
    if ratio != 1.0 and model == ModelKind.EX:
        raise DomainError("the exact model supports only isotropic traps")
    return ratio


def population_total(
    model: ModelKind,
    x: float,
    tau,
    aniso_ratio: float = 1.0,
    control: LSumControl = DEFAULT_CONTROL,
) -> float:
    """Atom number of ``model`` at x = -ln z and temperature tau."""
    model = ModelKind(model)
    tau = _as_tau(tau)
    if model == ModelKind.EX:
        if aniso_ratio != 1.0:
            raise DomainError("the exact model supports only isotropic traps")
        return exact.population_ex_x(x, tau, control)
    variant = semiclassical.ScVariant(model, aniso_ratio)
    return semiclassical.population_sc_x(variant, x, tau)


def saturated_population(
    model: ModelKind,
    tau,
    aniso_ratio: float = 1.0,
    control: LSumControl = DEFAULT_CONTROL,
) -> float:
    """Excited-state capacity at z = 1 (defines the transition point)."""
    model = ModelKind(model)
    tau = _as_tau(tau)
    if model == ModelKind.EX:
        if aniso_ratio != 1.0:
            raise DomainError("the exact model supports only isotropic traps")
        return exact.excited_population_x(0.0, tau, control)
    variant = semiclassical.ScVariant(model, aniso_ratio)
    return semiclassical.saturated_population_sc(variant, tau)


def solve_fugacity(
    model: ModelKind,
    atoms: float,
    tau,
    trap: TrapSpec | None = None,
    aniso_ratio: float | None = None,
    control: LSumControl = DEFAULT_CONTROL,
) -> GasState:
    """State with population_total == atoms at temperature tau.

    Models with a ground state (EX, SC) always admit a solution z in (0,1).
    SCINF and SC0 saturate: below their transition temperature the returned
    state is pinned at z = 1 and flagged condensed, with n0 holding the
    atoms the excited cloud cannot absorb.
    """
    model = ModelKind(model)
    if atoms <= 0.0:
        raise DomainError("atom number must be positive")
    tau = _as_tau(tau)
    ratio = _resolve_ratio(model, trap, aniso_ratio)

    if not model.has_ground_state:
        capacity = saturated_population(model, tau, ratio, control)
        if atoms >= capacity:
            return GasState(
                model=model,
                atoms=atoms,
                tau=tau,
                x=0.0,
                n0=atoms - capacity,
                condensed=True,
                aniso_ratio=ratio,
            )

    def residual(x: float) -> float:
        return population_total(model, x, tau, ratio, control) - atoms

    x_root = solve_monotone_root(residual, 1e-12, 60.0)
    pop = population_total(model, x_root, tau, ratio, control)
    if abs(pop - atoms) > _FUGACITY_RESIDUAL * atoms:
        raise ConvergenceError(
            f"fugacity solve left a residual of {abs(pop - atoms) / atoms:.3e} "
            f"(model {model.value}, N={atoms}, tau={tau})"
        )
    n0 = 1.0 / math.expm1(x_root) if model.has_ground_state else 0.0
    return GasState(
        model=model,
        atoms=atoms,
        tau=tau,
        x=x_root,
        n0=n0,
        condensed=False,
        aniso_ratio=ratio,
    )


def transition_temperature(
    model: ModelKind,
    atoms: float,
    trap: TrapSpec | None = None,
    aniso_ratio: float | None = None,
    control: LSumControl = DEFAULT_CONTROL,
) -> ReducedUnits:
    """tau* at which the saturated excited population equals ``atoms``.

    SC and SC0 share one saturation equation and return bit-identical
    values; SCINF has the closed form tau* = (zeta(3)/N)^{1/3}.
    """
    model = ModelKind(model)
    if atoms < 2.0:
        raise DomainError("transition temperature needs at least two atoms")
    ratio = _resolve_ratio(model, trap, aniso_ratio)
    tau_c = (zeta_const(3.0) / atoms) ** (1.0 / 3.0)
    if model == ModelKind.SCINF:
        return ReducedUnits(tau_c)

    def residual(tau: float) -> float:
        return saturated_population(model, tau, ratio, control) - atoms

    # All transition points sit within a few percent of tau_c.
    tau_star = solve_monotone_root(residual, tau_c / 4.0, tau_c * 4.0)
    return ReducedUnits(tau_star)
