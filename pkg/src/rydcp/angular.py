"""Exact angular momentum algebra for dipole and quadrupole couplings.

Wigner 3j symbols are evaluated with the Racah sum over factorial
logarithms (double precision is ample for the bounded j of this package);
Clebsch-Gordan coefficients follow the Condon-Shortley phase convention
throughout. Matrix elements of the radial unit vector and of its dyad
e_r (x) e_r between fine-structure states are assembled from spherical
harmonic expansions via Gaunt integrals. Selection-rule zeros are exact.
"""

from functools import lru_cache
from math import lgamma, sqrt, pi

import numpy as np

from .states import _doubled

SQRT_2PI_15 = sqrt(2.0 * pi / 15.0)


def _lnf(n):
    return lgamma(n + 1)


def _triangle_ok(j1, j2, j3):
    return abs(j1 - j2) <= j3 <= j1 + j2 and (j1 + j2 + j3) % 2 == 0


@lru_cache(maxsize=None)
def _w3j_doubled(j1, j2, j3, m1, m2, m3):
    # selection rules; exact zeros
    if m1 + m2 + m3 != 0:
        return 0.0
    if (j1 + m1) % 2 or (j2 + m2) % 2 or (j3 + m3) % 2:
        return 0.0
    if abs(m1) > j1 or abs(m2) > j2 or abs(m3) > j3:
        return 0.0
    if not _triangle_ok(j1, j2, j3):
        return 0.0
    if m1 == 0 and m2 == 0 and m3 == 0 and ((j1 + j2 + j3) // 2) % 2 == 1:
        return 0.0  # parity zero of the stretched sum

    # integer halves of the Racah-formula ingredients
    a = (j1 + j2 - j3) // 2
    b = (j1 - j2 + j3) // 2
    c = (-j1 + j2 + j3) // 2
    log_pref = 0.5 * (
        _lnf(a) + _lnf(b) + _lnf(c) - _lnf((j1 + j2 + j3) // 2 + 1)
        + _lnf((j1 + m1) // 2) + _lnf((j1 - m1) // 2)
        + _lnf((j2 + m2) // 2) + _lnf((j2 - m2) // 2)
        + _lnf((j3 + m3) // 2) + _lnf((j3 - m3) // 2)
    )

    t_min = max(0, (j2 - j3 - m1) // 2, (j1 - j3 + m2) // 2)
    t_max = min(a, (j1 - m1) // 2, (j2 + m2) // 2)
    total = 0.0
    for t in range(t_min, t_max + 1):
        log_den = (
            _lnf(t)
            + _lnf((j3 - j2 + m1) // 2 + t)
            + _lnf((j3 - j1 - m2) // 2 + t)
            + _lnf(a - t)
            + _lnf((j1 - m1) // 2 - t)
            + _lnf((j2 + m2) // 2 - t)
        )
        term = (-1.0) ** t * np.exp(log_pref - log_den)
        total += term
    phase = -1.0 if ((j1 - j2 - m3) // 2) % 2 else 1.0
    return phase * total


def wigner3j(j1, j2, j3, m1, m2, m3):
    """Wigner 3j symbol; half-integer arguments, 0 for violated rules."""
    return _w3j_doubled(
        _doubled(j1, "j1"), _doubled(j2, "j2"), _doubled(j3, "j3"),
        _doubled(m1, "m1"), _doubled(m2, "m2"), _doubled(m3, "m3"),
    )


def selection_rules_ok(j1, j2, j3, m1, m2, m3):
    """True when (j1 j2 j3; m1 m2 m3) passes every 3j selection rule."""
    d = [_doubled(v, "arg") for v in (j1, j2, j3, m1, m2, m3)]
    return (
        d[3] + d[4] + d[5] == 0
        and all((d[i] + d[i + 3]) % 2 == 0 for i in range(3))
        and all(abs(d[i + 3]) <= d[i] for i in range(3))
        and _triangle_ok(d[0], d[1], d[2])
    )


def clebsch_gordan(j1, m1, j2, m2, j, m):
    """<j1 m1; j2 m2 | j m> in the Condon-Shortley convention."""
    d_j1, d_m1 = _doubled(j1, "j1"), _doubled(m1, "m1")
    d_j2, d_m2 = _doubled(j2, "j2"), _doubled(m2, "m2")
    d_j, d_m = _doubled(j, "j"), _doubled(m, "m")
    if d_m1 + d_m2 != d_m:
        return 0.0
    three_j = _w3j_doubled(d_j1, d_j2, d_j, d_m1, d_m2, -d_m)
    if three_j == 0.0:
        return 0.0
    phase = -1.0 if ((d_j1 - d_j2 + d_m) // 2) % 2 else 1.0
    return phase * sqrt(d_j + 1.0) * three_j


def gaunt(l1, m1, l2, m2, l3, m3):
    """Integral of Y_l1m1 Y_l2m2 Y_l3m3 over the sphere (integer l)."""
    pref = sqrt((2 * l1 + 1) * (2 * l2 + 1) * (2 * l3 + 1) / (4.0 * pi))
    return (
        pref
        * _w3j_doubled(2 * l1, 2 * l2, 2 * l3, 0, 0, 0)
        * _w3j_doubled(2 * l1, 2 * l2, 2 * l3, 2 * m1, 2 * m2, 2 * m3)
    )


def _y_sandwich(l_f, m_f, lam, mu, l_i, m_i):
    """<Y_{l_f m_f}| Y_{lam mu} |Y_{l_i m_i}> via the Gaunt integral."""
    g = gaunt(l_f, -m_f, lam, mu, l_i, m_i)
    if g == 0.0:
        return 0.0
    return (-1.0) ** m_f * g


# e_r in spherical harmonics: component -> [(lam, mu, coefficient)]
_ER_COMPONENTS = (
    ((1, -1, sqrt(2.0 * pi / 3.0)), (1, 1, -sqrt(2.0 * pi / 3.0))),
    ((1, -1, 1j * sqrt(2.0 * pi / 3.0)), (1, 1, 1j * sqrt(2.0 * pi / 3.0))),
    ((1, 0, sqrt(4.0 * pi / 3.0)),),
)

# A-tensor of e_r (x) e_r = sqrt(2 pi / 15) A; entries -> [(lam, mu, coeff)]
_A_COMPONENTS = {
    (0, 0): ((2, -2, 1.0), (2, 2, 1.0), (2, 0, -sqrt(2.0 / 3.0)), (0, 0, sqrt(10.0 / 3.0))),
    (1, 1): ((2, -2, -1.0), (2, 2, -1.0), (2, 0, -sqrt(2.0 / 3.0)), (0, 0, sqrt(10.0 / 3.0))),
    (2, 2): ((2, 0, sqrt(8.0 / 3.0)), (0, 0, sqrt(10.0 / 3.0))),
    (0, 1): ((2, -2, 1j), (2, 2, -1j)),
    (0, 2): ((2, -1, 1.0), (2, 1, -1.0)),
    (1, 2): ((2, -1, 1j), (2, 1, 1j)),
}


def spherical_vector_element(l_f, m_f, l_i, m_i):
    """<Y_{l_f m_f}| e_r |Y_{l_i m_i}> as a Cartesian 3-vector."""
    out = np.zeros(3, dtype=complex)
    for comp, terms in enumerate(_ER_COMPONENTS):
        for lam, mu, coeff in terms:
            s = _y_sandwich(l_f, m_f, lam, mu, l_i, m_i)
            if s:
                out[comp] += coeff * s
    return out


def spherical_tensor_element(l_f, m_f, l_i, m_i):
    """<Y_{l_f m_f}| e_r (x) e_r |Y_{l_i m_i}> as a symmetric 3x3 matrix."""
    out = np.zeros((3, 3), dtype=complex)
    for (a, b), terms in _A_COMPONENTS.items():
        val = 0.0 + 0.0j
        for lam, mu, coeff in terms:
            s = _y_sandwich(l_f, m_f, lam, mu, l_i, m_i)
            if s:
                val += coeff * s
        val *= SQRT_2PI_15
        out[a, b] = val
        if a != b:
            out[b, a] = val
    return out


def _jm_sandwich(element, final, initial):
    """Convert an m_l-basis matrix element to the fine-structure basis.

    Sums the spin projection over both Clebsch-Gordan factors of the
    |l j m> -> |l m_l> |s m_s> decomposition.
    """
    total = None
    for ms2 in (-1, 1):
        ml_i2 = initial.m2 - ms2
        ml_f2 = final.m2 - ms2
        if abs(ml_i2) > 2 * initial.l or abs(ml_f2) > 2 * final.l:
            continue
        c_i = clebsch_gordan(initial.l, ml_i2 / 2, 0.5, ms2 / 2, initial.j2 / 2, initial.m2 / 2)
        if c_i == 0.0:
            continue
        c_f = clebsch_gordan(final.l, ml_f2 / 2, 0.5, ms2 / 2, final.j2 / 2, final.m2 / 2)
        if c_f == 0.0:
            continue
        part = c_i * c_f * element(final.l, ml_f2 // 2, initial.l, ml_i2 // 2)
        total = part if total is None else total + part
    return total


def dipole_angular(final, initial):
    """<l'j'm'| e_r |ljm> as a Cartesian 3-vector (dimensionless).

    Zero unless |l - l'| = 1; exact zeros where selection rules forbid.
    """
    if abs(final.l - initial.l) != 1:
        return np.zeros(3, dtype=complex)
    out = _jm_sandwich(spherical_vector_element, final, initial)
    return np.zeros(3, dtype=complex) if out is None else out


def quadrupole_angular(final, initial):
    """<l'j'm'| e_r (x) e_r |ljm> as a symmetric 3x3 matrix (dimensionless).

    Zero unless l + l' is even, |l - l'| <= 2 and (l, l') != (0, 0).
    """
    dl = abs(final.l - initial.l)
    if (final.l + initial.l) % 2 or dl > 2 or (final.l == 0 and initial.l == 0):
        return np.zeros((3, 3), dtype=complex)
    out = _jm_sandwich(spherical_tensor_element, final, initial)
    return np.zeros((3, 3), dtype=complex) if out is None else out
