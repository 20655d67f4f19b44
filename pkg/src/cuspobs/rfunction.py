"""The aggregated counting function of a configuration of cusps.

For cusps with semigroups ``S_1, ..., S_n``::

    R(m) = min over m_1 + ... + m_n = m, m_i >= 0, of sum_i #S_i ∩ [0, m_i)

which is the iterated min-plus (infimal) convolution of the individual
counting functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InputError, InvariantViolation
from .semigroup import CuspDescriptor, SemigroupTable, build_semigroup


@dataclass(frozen=True)
class Configuration:
    """An unordered collection of cusps on one curve; ``g`` is the total delta."""

    cusps: tuple[SemigroupTable, ...]

    def __post_init__(self):
        cusps = tuple(self.cusps)
        if not cusps:
            raise InputError("a configuration needs at least one cusp (use <1> for smooth)")
        object.__setattr__(self, "cusps", cusps)

    @classmethod
    def from_descriptors(cls, descriptors: Iterable[CuspDescriptor]) -> "Configuration":
        return cls(tuple(build_semigroup(d) for d in descriptors))

    @classmethod
    def smooth(cls) -> "Configuration":
        return cls.from_descriptors([CuspDescriptor.generators(1)])

    @property
    def g(self) -> int:
        return sum(c.delta for c in self.cusps)

    @property
    def n(self) -> int:
        return len(self.cusps)

    @property
    def semigroup_mode(self) -> bool:
        return all(c.is_semigroup for c in self.cusps)

    @property
    def descriptors(self) -> list[CuspDescriptor]:
        return [c.descriptor for c in self.cusps]

    def __str__(self):
        return " + ".join(str(c.descriptor) for c in self.cusps)


@dataclass(frozen=True)
class RTable:
    values: tuple[int, ...]
    horizon: int

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self):
        return len(self.values)


def _count_row(cusp: SemigroupTable, horizon: int) -> list[int]:
    return [cusp.count_below(k) for k in range(horizon + 1)]


def min_plus(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Truncated min-plus convolution ``c[k] = min_{i+j=k} a[i] + b[j]``."""
    n = min(len(a), len(b))
    return [min(a[i] + b[k - i] for i in range(k + 1)) for k in range(n)]


def _suffix_tables(cfg: Configuration, horizon: int) -> list[list[int]]:
    # tables[i] = R restricted to cusps i..n-1
    rows = [_count_row(c, horizon) for c in cfg.cusps]
    tables = [rows[-1]]
    for row in reversed(rows[:-1]):
        tables.append(min_plus(row, tables[-1]))
    tables.reverse()
    return tables


@lru_cache(maxsize=256)
def _r_values(cfg: Configuration, horizon: int) -> tuple[int, ...]:
    return tuple(_suffix_tables(cfg, horizon)[0])


def r_table(cfg: Configuration, horizon: int, *, check: bool = True) -> RTable:
    """``R[0..horizon]`` by pairwise min-plus convolution.

    With ``check`` (the default) the unit-step law is verified, and for
    semigroup-mode configurations also the symmetry and stability laws;
    a violation raises :class:`InvariantViolation`.
    """
    if horizon < 0:
        raise InputError(f"horizon must be >= 0, got {horizon}")
    values = _r_values(cfg, horizon)
    table = RTable(values, horizon)
    if check:
        problems = r_table_findings(cfg, table)
        if problems:
            name, msg = problems[0]
            if name == "unit-step" or name == "origin" or cfg.semigroup_mode:
                raise InvariantViolation(name, msg)
    return table


def r_table_findings(cfg: Configuration, table: RTable) -> list[tuple[str, str]]:
    """Invariant violations of an R-table as ``(name, message)`` pairs."""
    out = []
    vals = table.values
    g = cfg.g
    if vals[0] != 0:
        out.append(("origin", f"R[0] = {vals[0]}"))
    for k in range(len(vals) - 1):
        if vals[k + 1] - vals[k] not in (0, 1):
            out.append(("unit-step", f"R[{k + 1}] - R[{k}] = {vals[k + 1] - vals[k]}"))
            break
    for k in range(2 * g, len(vals)):
        if vals[k] != k - g:
            out.append(("stability", f"R[{k}] = {vals[k]} != {k} - g = {k - g}"))
            break
    for m in range(0, min(g, len(vals) - 1 - g) + 1):
        if vals[g + m] - vals[g - m] != m:
            out.append(("symmetry", f"R[g+{m}] - R[g-{m}] = {vals[g + m] - vals[g - m]} != {m}"))
            break
    return out


def r_value(cfg: Configuration, m: int) -> int:
    """``R(m)``, extended by ``R(m) = 0`` for ``m <= 0``."""
    if m <= 0:
        return 0
    if cfg.n == 1:
        return cfg.cusps[0].count_below(m)
    # round the horizon up so repeated lookups share one cached table
    return _r_values(cfg, max(64, 1 << m.bit_length()))[m]


def witness(cfg: Configuration, m: int) -> tuple[int, ...]:
    """Lexicographically smallest composition ``(m_1, ..., m_n)`` attaining ``R(m)``."""
    if m < 0:
        raise InputError(f"witness needs m >= 0, got {m}")
    tables = _suffix_tables(cfg, m)
    parts = []
    rest = m
    for i, cusp in enumerate(cfg.cusps[:-1]):
        target = tables[i][rest]
        nxt = tables[i + 1]
        for mi in range(rest + 1):
            if cusp.count_below(mi) + nxt[rest - mi] == target:
                parts.append(mi)
                rest -= mi
                break
    parts.append(rest)
    return tuple(parts)


def codim_bound(cfg: Configuration, k: Sequence[int]) -> int:
    """``sum_i #S_i ∩ [0, k_i)``, the bound on the codimension of sections
    with prescribed local intersection multiplicities ``k_i``."""
    k = tuple(k)
    if len(k) != cfg.n:
        raise InputError(f"expected {cfg.n} multiplicities, got {len(k)}")
    if any(ki < 0 for ki in k):
        raise InputError(f"multiplicities must be >= 0, got {k}")
    return sum(c.count_below(ki) for c, ki in zip(cfg.cusps, k))
