"""CODATA constants and atomic-unit conversions.

All quantities in this package are SI unless a function documents atomic
units; the radial solver works internally in a.u. and converts at its
boundary. Constants come from scipy.constants (CODATA) and are echoed
into run manifests by the CLI so every output is self-describing.
"""

from scipy.constants import (
    c,
    e as elementary_charge,
    epsilon_0,
    h,
    hbar,
    k as k_B,
    mu_0,
    physical_constants,
)

bohr_radius = physical_constants["Bohr radius"][0]          # m
hartree = physical_constants["Hartree energy"][0]           # J
rydberg_energy = 0.5 * hartree                              # J, infinite nuclear mass

# atomic units of the multipole moments
au_dipole = elementary_charge * bohr_radius                 # C m
au_quadrupole = elementary_charge * bohr_radius**2          # C m^2


def constants_manifest():
    """Pinned constant values for run manifests."""
    return {
        "c_m_per_s": c,
        "hbar_J_s": hbar,
        "h_J_s": h,
        "k_B_J_per_K": k_B,
        "epsilon_0_F_per_m": epsilon_0,
        "mu_0_H_per_m": mu_0,
        "elementary_charge_C": elementary_charge,
        "bohr_radius_m": bohr_radius,
        "hartree_J": hartree,
        "rydberg_energy_J": rydberg_energy,
    }
