"""Closed-form single-excitation dynamics of two V-type emitters in a lossy cavity.

Two identical three-level emitters (upper levels a and b, common ground level)
share one excitation with a damped cavity mode of linewidth ``kappa``, detuned
by ``delta`` from the degenerate transitions.  Integrating the cavity out
exactly leaves four excited-state amplitudes.  Their evolution splits into two
collective channels: the intra-emitter combinations c_a + c_b and c_a - c_b
relax with effective strength 1 + theta and 1 - theta, where theta in [-1, 1]
is the interference parameter of the two transition dipoles.  At theta = 1 the
subtracting channel stops relaxing altogether.

All rates are quoted in units of the free-space emitter decay rate ``gamma0``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

#: Tolerance on the total excited-state weight of an amplitude set.
AMPLITUDE_NORM_TOL = 1e-12

# |d * t / 2| below which the degenerate (critically damped) series form is used.
_SMALL_ARG = 1e-4

_BRANCHES = (+1, -1)

_INV_SQRT2 = 2.0 ** -0.5


@dataclass(frozen=True)
class SystemParams:
    """Physical parameters of the emitter-cavity system.

    Parameters
    ----------
    kappa:
        Cavity linewidth (spectral half-width of the reservoir), > 0.
    theta:
        Dipole interference parameter, |theta| <= 1.
    delta:
        Detuning of the cavity mode from the transitions.
    gamma0:
        Free-space decay rate setting the unit system (default 1).
    """

    kappa: float
    theta: float = 1.0
    delta: float = 0.0
    gamma0: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and self.kappa > 0.0):
            raise ValueError(f"kappa must be positive and finite, got {self.kappa}")
        if not (math.isfinite(self.theta) and abs(self.theta) <= 1.0):
            raise ValueError(f"theta must satisfy |theta| <= 1, got {self.theta}")
        if not math.isfinite(self.delta):
            raise ValueError(f"delta must be finite, got {self.delta}")
        if not (math.isfinite(self.gamma0) and self.gamma0 > 0.0):
            raise ValueError(f"gamma0 must be positive and finite, got {self.gamma0}")

    @property
    def complex_width(self) -> complex:
        """Cavity pole kappa - i*delta governing the exponential memory kernel."""
        return self.kappa - 1j * self.delta


@dataclass(frozen=True)
class AmplitudeSet:
    """Excited-state amplitudes (c1a, c1b, c2a, c2b) of the two emitters.

    The digit labels the emitter and the letter its upper level.  The total
    excited weight can never exceed one; whatever is missing sits in the
    emitters' ground state and the emitted photon.
    """

    c1a: complex = 0.0
    c1b: complex = 0.0
    c2a: complex = 0.0
    c2b: complex = 0.0

    def __post_init__(self):
        values = (self.c1a, self.c1b, self.c2a, self.c2b)
        if not all(cmath.isfinite(complex(c)) for c in values):
            raise ValueError(f"amplitudes must be finite, got {values}")
        if self.norm_sq > 1.0 + AMPLITUDE_NORM_TOL:
            raise ValueError(
                f"excited-state weight {self.norm_sq} exceeds 1 beyond tolerance"
            )

    @property
    def norm_sq(self) -> float:
        return (
            abs(self.c1a) ** 2
            + abs(self.c1b) ** 2
            + abs(self.c2a) ** 2
            + abs(self.c2b) ** 2
        )

    def astuple(self) -> tuple[complex, complex, complex, complex]:
        return (complex(self.c1a), complex(self.c1b), complex(self.c2a), complex(self.c2b))


@dataclass(frozen=True)
class PropagatorCoefficients:
    """Mixing coefficients (g1, g2, g3) of the four-amplitude linear map.

    g1 couples an amplitude to itself, g2 to the same level of the other
    emitter and g3 to both amplitudes of the opposite level.
    """

    g1: complex
    g2: complex
    g3: complex


def bell_initial() -> AmplitudeSet:
    """Maximally entangled start: emitter 1 in b and emitter 2 in a, in equal
    superposition."""
    return AmplitudeSet(c1b=_INV_SQRT2, c2a=_INV_SQRT2)


def product_initial() -> AmplitudeSet:
    """Separable start with emitter 1 fully in its upper b level."""
    return AmplitudeSet(c1b=1.0)


def _require_time(t: float) -> float:
    if not (math.isfinite(t) and t >= 0.0):
        raise ValueError(f"t must be nonnegative and finite, got {t}")
    return float(t)


def collective_root(params: SystemParams, branch: int) -> complex:
    """Principal square root of (kappa - i delta)^2 - 4 gamma0 kappa (1 +/- theta).

    ``branch`` is +1 for the collective channel in which the two intra-emitter
    amplitudes add, -1 for the one in which they subtract.  Every downstream
    consumer is even in this root, so the sign of the square root itself is
    observably irrelevant.
    """
    if branch not in _BRANCHES:
        raise ValueError(f"branch must be +1 or -1, got {branch}")
    nu = params.complex_width
    coupling = 4.0 * params.gamma0 * params.kappa * (1.0 + branch * params.theta)
    return cmath.sqrt(nu * nu - coupling)


def propagator(params: SystemParams, branch: int, t: float) -> complex:
    """Amplitude response G(t) of one collective channel, G(0) = 1.

    Uses the two characteristic exponentials exp((+/-d - nu) t / 2); for
    |theta| <= 1 both exponents have nonpositive real part, so the expression
    stays bounded for arbitrarily large t.  Near the critically damped point
    d = 0 the removable singularity is crossed on the series of sinh(z)/z.
    """
    t = _require_time(t)
    nu = params.complex_width
    d = collective_root(params, branch)
    z = 0.5 * d * t
    if abs(z) < _SMALL_ARG:
        z2 = z * z
        sinhc = 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0)
        return cmath.exp(-0.5 * nu * t) * (cmath.cosh(z) + 0.5 * nu * t * sinhc)
    w = 0.5 * nu / d
    return (0.5 + w) * cmath.exp(0.5 * (d - nu) * t) + (0.5 - w) * cmath.exp(-0.5 * (d + nu) * t)


def mixing_coefficients(params: SystemParams, t: float) -> PropagatorCoefficients:
    """Coefficients propagating the four amplitudes over a span t.

    Built from the two channel responses; g1 - g2 = 1 holds identically, which
    is the statement that the difference between the two emitters' amplitudes
    is a constant of motion (both emitters see the same cavity).
    """
    mean = 0.25 * (propagator(params, +1, t) + propagator(params, -1, t))
    half_diff = 0.25 * (propagator(params, +1, t) - propagator(params, -1, t))
    return PropagatorCoefficients(g1=mean + 0.5, g2=mean - 0.5, g3=half_diff)


def evolve_amplitudes(init: AmplitudeSet, params: SystemParams, t: float) -> AmplitudeSet:
    """Propagate an amplitude set forward by t using the exact closed form."""
    g = mixing_coefficients(params, t)
    cross_a = init.c1a + init.c2a
    cross_b = init.c1b + init.c2b
    return AmplitudeSet(
        c1a=g.g1 * init.c1a + g.g2 * init.c2a + g.g3 * cross_b,
        c1b=g.g1 * init.c1b + g.g2 * init.c2b + g.g3 * cross_a,
        c2a=g.g1 * init.c2a + g.g2 * init.c1a + g.g3 * cross_b,
        c2b=g.g1 * init.c2b + g.g2 * init.c1b + g.g3 * cross_a,
    )
