"""Inward Numerov integration of the radial Schroedinger equation.

The equation is solved in atomic units for a pure Coulomb potential -1/r
with the level energy supplied by the quantum-defect table (core
scattering is absorbed in the defect). The mesh is uniform in x = sqrt(r),
which keeps the number of points per local de Broglie wavelength nearly
constant; the transformed unknown is y(x) = u(r)/sqrt(x) with u = r R(r),
obeying y'' = g(x) y,  g = 3/(4r) - 8 - 8 r E + 4 l(l+1)/r.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from . import constants
from .errors import GridOverlapError, IntegrationFailureError
from .states import effective_quantum_number, state_energy

_OVERFLOW_GUARD = 1e100


@dataclass(frozen=True)
class GridSpec:
    """Radial mesh parameters (atomic units).

    alpha_core floors the inner cutoff; the default cutoff is one tenth of
    the classical inner turning point r- = n*^2 - n* sqrt(n*^2 - l(l+1)).
    The step is in sqrt(a0); it is refined automatically if it would
    resolve the local wavelength with fewer than min_points_per_wavelength
    points. r_in/r_out override the computed bounds when set.
    """

    alpha_core: float = 0.1
    step: float = 0.01
    outer_padding: float = 15.0
    min_points_per_wavelength: int = 40
    r_in: float = None
    r_out: float = None

    def inner_radius(self, n_star, l):
        if self.r_in is not None:
            return self.r_in
        turning = n_star**2 - n_star * math.sqrt(max(n_star**2 - l * (l + 1), 0.0))
        return max(self.alpha_core, turning / 10.0)

    def outer_radius(self, n_star):
        if self.r_out is not None:
            return self.r_out
        return 2.0 * n_star * (n_star + self.outer_padding)


@dataclass(frozen=True)
class RadialWavefunction:
    """Normalized u(r) = r R(r) on a strictly decreasing radial grid (a.u.)."""

    r: np.ndarray
    u: np.ndarray
    normalized: bool
    step: float      # mesh spacing in x = sqrt(r)
    x_start: float   # innermost x node

    def __post_init__(self):
        if not np.all(np.diff(self.r) < 0):
            raise ValueError("radial grid must be strictly decreasing")

    @property
    def x(self):
        """Increasing sqrt(r) mesh."""
        return self.x_start + self.step * np.arange(len(self.r))

    @property
    def u_increasing(self):
        return self.u[::-1]

    def node_count(self):
        """Number of sign changes of u, ignoring the noise floor."""
        u = self.u_increasing
        significant = u[np.abs(u) > 1e-12 * np.abs(u).max()]
        return int(np.sum(np.signbit(significant[1:]) != np.signbit(significant[:-1])))

    def norm_integral(self):
        """Quadrature of u^2 over r (1 after normalization)."""
        y2 = self.u_increasing**2 / self.x  # y^2 = u^2 / x
        return simpson(2.0 * self.x**2 * y2, dx=self.step)

    def value_at(self, r):
        """Interpolated u at radii r (a.u.)."""
        return np.interp(np.sqrt(r), self.x, self.u_increasing)


def _g_coefficient(x, l, energy_au):
    r = x * x
    return 3.0 / (4.0 * r) - 8.0 - 8.0 * r * energy_au + 4.0 * l * (l + 1) / r


def numerov_radial(state, table, grid=GridSpec()):
    """Integrate the radial equation inward and return normalized u(r).

    Args:
        state: QuantumState to solve for.
        table: QuantumDefectTable supplying the level energy.
        grid: GridSpec with cutoff, outer radius and step.

    Returns:
        RadialWavefunction with unit norm, grid ordered outward-in.

    Raises:
        IntegrationFailureError: the recursion overflowed before the inner
            cutoff (energy or grid inconsistent with a bound state).
    """
    n_star = effective_quantum_number(state, table)
    energy_au = state_energy(state, table) / constants.hartree

    h = grid.step
    x_in = math.sqrt(grid.inner_radius(n_star, state.l))
    x_out = math.sqrt(grid.outer_radius(n_star))
    k0 = max(1, math.ceil(x_in / h - 1e-12))
    k1 = math.ceil(x_out / h)
    if k1 - k0 < 8:
        raise IntegrationFailureError(f"grid for {state} has fewer than 8 points")
    x = h * np.arange(k0, k1 + 1)

    g = _g_coefficient(x, state.l, energy_au)
    g_min = g.min()
    if g_min < 0:
        required = 2.0 * math.pi / math.sqrt(-g_min) / grid.min_points_per_wavelength
        if h > required:
            refined = GridSpec(
                alpha_core=grid.alpha_core,
                step=required,
                outer_padding=grid.outer_padding,
                min_points_per_wavelength=grid.min_points_per_wavelength,
                r_in=grid.r_in,
                r_out=grid.r_out,
            )
            return numerov_radial(state, table, refined)

    w = 1.0 - (h * h / 12.0) * g       # Numerov weights for y'' = g y
    y = np.empty_like(x)
    y[-1] = 1e-15
    y[-2] = 2e-15
    for i in range(len(x) - 3, -1, -1):
        y[i] = ((12.0 - 10.0 * w[i + 1]) * y[i + 1] - w[i + 2] * y[i + 2]) / w[i]
        if abs(y[i]) > _OVERFLOW_GUARD:
            raise IntegrationFailureError(
                f"radial integration for {state} diverged at r = {x[i]**2:.3g} a0 "
                f"before the cutoff {x[0]**2:.3g} a0 (check energy and grid)"
            )

    u = y * np.sqrt(x)
    norm = simpson(2.0 * x * u * u, dx=h)  # integrand 2 x^2 y^2 written via u
    u /= math.sqrt(norm)

    return RadialWavefunction(
        r=(x * x)[::-1].copy(),
        u=u[::-1].copy(),
        normalized=True,
        step=h,
        x_start=x[0],
    )


def radial_matrix_element(wf_a, wf_b, power):
    """<A| r^power |B> by Simpson quadrature on the shared mesh (a0^power).

    Grids produced with the same step align exactly and are sliced; unequal
    steps fall back to linear interpolation of B onto A's mesh over the
    common overlap. Symmetric in (A, B).
    """
    if power not in (1, 2):
        raise ValueError("power must be 1 or 2")
    xa, xb = wf_a.x, wf_b.x
    ua, ub = wf_a.u_increasing, wf_b.u_increasing

    lo = max(xa[0], xb[0])
    hi = min(xa[-1], xb[-1])
    same_step = abs(wf_a.step - wf_b.step) < 1e-12 * wf_a.step
    offset = (wf_b.x_start - wf_a.x_start) / wf_a.step
    aligned = same_step and abs(offset - round(offset)) < 1e-6

    if aligned:
        ia = slice(max(0, round((lo - xa[0]) / wf_a.step)),
                   round((hi - xa[0]) / wf_a.step) + 1)
        ib = slice(max(0, round((lo - xb[0]) / wf_b.step)),
                   round((hi - xb[0]) / wf_b.step) + 1)
        x, fa, fb = xa[ia], ua[ia], ub[ib]
        h = wf_a.step
    else:
        n = int((hi - lo) / min(wf_a.step, wf_b.step)) + 1
        if n < 8:
            raise GridOverlapError("radial grids share fewer than 8 points")
        x = np.linspace(lo, hi, n)
        fa = np.interp(x, xa, ua)
        fb = np.interp(x, xb, ub)
        h = x[1] - x[0]

    if len(x) < 8:
        raise GridOverlapError("radial grids share fewer than 8 points")
    return simpson(2.0 * fa * fb * x ** (2 * power + 1), dx=h)
