"""Fine-structure state labels and quantum-defect energies.

States carry doubled angular momentum quantum numbers (j2 = 2j, m2 = 2m)
so half-integers are exact. Energies follow the Rydberg-Ritz form
E = -Ry/n*^2 with n* = n - delta0 - delta2/(n - delta0)^2; series beyond
the table's largest l fall back to a vanishing defect.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from . import constants
from .errors import InvalidStateError

L_LETTERS = "spdfghiklm"


def _doubled(value, name):
    d = round(2 * value)
    if abs(2 * value - d) > 1e-9:
        raise ValueError(f"{name} = {value} is not a half-integer")
    return int(d)


@dataclass(frozen=True, order=True)
class QuantumState:
    """One electronic state |n, l, j, m> of a one-valence-electron atom."""

    n: int
    l: int
    j2: int
    m2: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n = {self.n} must be a positive integer")
        if not 0 <= self.l < self.n:
            raise ValueError(f"l = {self.l} outside [0, n) for n = {self.n}")
        if self.j2 % 2 == 0 or self.m2 % 2 == 0:
            raise ValueError("j and m must be half-integers (odd doubled values)")
        if self.j2 not in (2 * self.l - 1, 2 * self.l + 1) or self.j2 < 1:
            raise ValueError(f"j = {self.j2}/2 incompatible with l = {self.l}")
        if abs(self.m2) > self.j2:
            raise ValueError(f"|m| = {abs(self.m2)}/2 exceeds j = {self.j2}/2")

    @classmethod
    def make(cls, n, l, j, m=None):
        """Build from conventional (possibly float) quantum numbers."""
        if m is None:
            m = j
        return cls(int(n), int(l), _doubled(j, "j"), _doubled(m, "m"))

    @property
    def j(self):
        return self.j2 / 2

    @property
    def m(self):
        return self.m2 / 2

    @property
    def series(self):
        """(l, j2) pair identifying the Rydberg series."""
        return (self.l, self.j2)

    def level_label(self):
        """Label of the fine-structure level, e.g. '43p3/2'."""
        letter = L_LETTERS[self.l] if self.l < len(L_LETTERS) else f"(l={self.l})"
        return f"{self.n}{letter}{self.j2}/2"

    def sublevel_label(self):
        sign = "+" if self.m2 >= 0 else "-"
        return f"{self.level_label()},m={sign}{abs(self.m2)}/2"

    def __str__(self):
        return self.level_label()


@dataclass(frozen=True)
class QuantumDefectTable:
    """Rydberg-Ritz coefficients per (l, j) series of one species.

    The table must be complete up to its largest l: both fine-structure
    series of every l <= l_max need an entry. Series with l > l_max use
    delta = 0.
    """

    species: str
    series: Mapping[tuple, tuple]
    rydberg_energy: float = field(default=constants.rydberg_energy)

    def __post_init__(self):
        for (l, j2), (d0, _d2) in self.series.items():
            if j2 not in (2 * l - 1, 2 * l + 1) or j2 < 1:
                raise ValueError(f"series (l={l}, j2={j2}) is not a valid fine-structure pair")
            if d0 < 0:
                raise ValueError(f"delta0 = {d0} < 0 for series (l={l}, j2={j2})")
        lmax = self.l_max
        for l in range(lmax + 1):
            for j2 in {max(1, 2 * l - 1), 2 * l + 1}:
                if (l, j2) not in self.series:
                    raise ValueError(
                        f"defect table for {self.species} is missing series "
                        f"(l={l}, j2={j2}) below l_max={lmax}"
                    )

    @property
    def l_max(self):
        return max((l for (l, _j2) in self.series), default=-1)

    def defect(self, n, l, j2):
        """Rydberg-Ritz defect delta0 + delta2/(n - delta0)^2."""
        entry = self.series.get((l, j2))
        if entry is None:
            return 0.0
        d0, d2 = entry
        return d0 + d2 / (n - d0) ** 2

    @classmethod
    def zero(cls, species="H", rydberg_energy=constants.rydberg_energy):
        """Defect-free table (hydrogen-like energies)."""
        return cls(species=species, series={}, rydberg_energy=rydberg_energy)

    @classmethod
    def from_csv(cls, path, rydberg_energy=constants.rydberg_energy):
        """Read a `species,l,j2,delta0,delta2` table; '#' starts a comment."""
        series = {}
        species = None
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = [f.strip() for f in line.split(",")]
            if fields[0].lower() == "species":  # header row
                continue
            if len(fields) != 5:
                raise ValueError(f"{path}:{lineno}: expected 5 fields, got {len(fields)}")
            name, l, j2, d0, d2 = fields
            if species is None:
                species = name
            elif name != species:
                raise ValueError(f"{path}:{lineno}: mixed species {name!r} and {species!r}")
            series[(int(l), int(j2))] = (float(d0), float(d2))
        if species is None:
            raise ValueError(f"{path}: no defect rows found")
        return cls(species=species, series=series, rydberg_energy=rydberg_energy)


def effective_quantum_number(state, table):
    """n* = n - delta(n, l, j); raises InvalidStateError if nonpositive."""
    n_star = state.n - table.defect(state.n, state.l, state.j2)
    if n_star <= 0:
        raise InvalidStateError(
            f"effective quantum number {n_star:.4f} <= 0 for {state} "
            f"({table.species}); n too small for this series' defect"
        )
    return n_star


def state_energy(state, table):
    """Level energy -Ry/n*^2 in joules (relative to the ionization limit)."""
    return -table.rydberg_energy / effective_quantum_number(state, table) ** 2


def transition_frequency(a, b, table):
    """Signed angular frequency (E_b - E_a)/hbar in rad/s."""
    return (state_energy(b, table) - state_energy(a, table)) / constants.hbar
