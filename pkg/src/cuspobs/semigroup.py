"""Numerical semigroups of cuspidal singularities.

A cusp type is described in one of three ways: generators of its semigroup,
its Puiseux characteristic sequence, or (for L-space knots) an explicit
gap set.  Every descriptor is normalized into a :class:`SemigroupTable`
holding the gaps, the delta invariant, the conductor and the counting
function ``k -> #S ∩ [0, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import DescriptorError, InvariantViolation

GENERATORS = "gens"
CHARACTERISTIC = "char"
GAP_SET = "gaps"
_KINDS = (GENERATORS, CHARACTERISTIC, GAP_SET)


def _int_tuple(values: Iterable, what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise DescriptorError(f"{what}: expected integers, got {v!r}")
        out.append(v)
    return tuple(out)


def characteristic_gcds(beta: Sequence[int]) -> list[int]:
    """Return ``[e_0, ..., e_k]`` with ``e_0 = beta_0``, ``e_i = gcd(e_{i-1}, beta_i)``."""
    es = [beta[0]]
    for b in beta[1:]:
        es.append(gcd(es[-1], b))
    return es


def _check_characteristic(beta: tuple[int, ...]) -> None:
    if len(beta) < 2:
        raise DescriptorError(
            f"characteristic sequence {beta} needs beta_0 and at least one beta_i")
    if beta[0] < 2:
        raise DescriptorError(f"characteristic sequence {beta}: beta_0 must be >= 2")
    if any(b <= a for a, b in zip(beta, beta[1:])):
        raise DescriptorError(f"characteristic sequence {beta} is not strictly increasing")
    es = characteristic_gcds(beta)
    if any(b >= a for a, b in zip(es, es[1:])):
        raise DescriptorError(
            f"characteristic sequence {beta}: gcds {es} do not strictly decrease")
    if es[-1] != 1:
        raise DescriptorError(
            f"characteristic sequence {beta}: final gcd is {es[-1]}, not 1")


@dataclass(frozen=True)
class CuspDescriptor:
    """A cusp type: ``kind`` is ``"gens"``, ``"char"`` or ``"gaps"``."""

    kind: str
    values: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DescriptorError(f"unknown descriptor kind {self.kind!r}")
        values = _int_tuple(self.values, self.kind)
        object.__setattr__(self, "values", values)
        if self.kind == GENERATORS:
            if not values:
                raise DescriptorError("generator list is empty")
            if any(v <= 0 for v in values):
                raise DescriptorError(f"generators {values} must be positive")
            if reduce(gcd, values) != 1:
                raise DescriptorError(f"generators {values} have gcd != 1")
        elif self.kind == CHARACTERISTIC:
            _check_characteristic(values)
        else:
            if 0 in values:
                raise DescriptorError("gap set contains 0")
            if any(v < 0 for v in values):
                raise DescriptorError(f"gap set {values} has negative entries")
            if len(set(values)) != len(values):
                raise DescriptorError(f"gap set {values} has repeated entries")
            object.__setattr__(self, "values", tuple(sorted(values)))

    @classmethod
    def generators(cls, *gens: int) -> "CuspDescriptor":
        return cls(GENERATORS, tuple(gens))

    @classmethod
    def characteristic(cls, *beta: int) -> "CuspDescriptor":
        return cls(CHARACTERISTIC, tuple(beta))

    @classmethod
    def gap_set(cls, gaps: Iterable[int]) -> "CuspDescriptor":
        return cls(GAP_SET, tuple(gaps))

    @property
    def is_semigroup_mode(self) -> bool:
        return self.kind != GAP_SET

    def to_dict(self) -> dict:
        return {self.kind: list(self.values)}

    @classmethod
    def from_dict(cls, data: dict) -> "CuspDescriptor":
        if not isinstance(data, dict) or len(data) != 1:
            raise DescriptorError(
                f"cusp entry must have exactly one of {_KINDS}, got {data!r}")
        (kind, values), = data.items()
        if not isinstance(values, (list, tuple)):
            raise DescriptorError(f"cusp entry {kind!r} must be a list of integers")
        return cls(kind, tuple(values))

    def __str__(self):
        body = ",".join(map(str, self.values))
        if self.kind == GENERATORS:
            return f"<{body}>"
        if self.kind == CHARACTERISTIC:
            b0, *rest = self.values
            return f"({b0};{','.join(map(str, rest))})"
        return "gaps{" + body + "}"


def char_to_generators(beta: Sequence[int]) -> tuple[int, ...]:
    """Minimal semigroup generators from a Puiseux characteristic sequence.

    Uses the classical recursion ``bb_0 = beta_0``, ``bb_1 = beta_1`` and
    ``bb_{i+1} = (e_{i-1}/e_i) bb_i + beta_{i+1} - beta_i``.

    >>> char_to_generators((4, 6, 7))
    (4, 6, 13)
    """
    beta = tuple(beta)
    _check_characteristic(beta)
    es = characteristic_gcds(beta)
    bars = [beta[0], beta[1]]
    for i in range(1, len(beta) - 1):
        bars.append((es[i - 1] // es[i]) * bars[i] + beta[i + 1] - beta[i])
    return tuple(bars)


def milnor_number_from_characteristic(beta: Sequence[int]) -> int:
    """``mu = sum_i (beta_i - 1)(e_{i-1} - e_i)``; equals ``2 delta`` for a cusp."""
    es = characteristic_gcds(beta)
    return sum((beta[i] - 1) * (es[i - 1] - es[i]) for i in range(1, len(beta)))


def semigroup_members(generators: Sequence[int]) -> tuple[list[bool], int]:
    """Membership flags of ``<generators>`` on ``[0, conductor)`` and the conductor.

    The scan stops as soon as ``min(generators)`` consecutive members are
    found: every larger integer is then reachable by adding the smallest
    generator.
    """
    gens = sorted(set(generators))
    if reduce(gcd, gens) != 1:
        raise DescriptorError(f"generators {tuple(generators)} have gcd != 1")
    a = gens[0]
    member = [True]
    run = 1
    n = 0
    while run < a:
        n += 1
        hit = any(g <= n and member[n - g] for g in gens)
        member.append(hit)
        run = run + 1 if hit else 0
    conductor = len(member) - run
    return member[:conductor], conductor


def minimal_generators(gaps: Sequence[int]) -> tuple[int, ...]:
    """Minimal generating set of the semigroup ``N \\ gaps``."""
    gapset = set(gaps)
    conductor = max(gapset) + 1 if gapset else 0
    if conductor == 0:
        return (1,)
    members = [k for k in range(1, 2 * conductor + 1) if k not in gapset]
    memset = set(members)
    out = []
    for s in members:
        if not any(x in memset and (s - x) in memset for x in members if x <= s - x):
            out.append(s)
    # every integer >= conductor + (smallest member) is decomposable
    return tuple(g for g in out if g < conductor + members[0])


@dataclass(frozen=True)
class SemigroupTable:
    """Normalized data of one cusp.

    ``count[k] = #S ∩ [0, k)`` for ``0 <= k <= conductor + 1``; beyond the
    table use :meth:`count_below`, which extends by ``k - delta``.
    """

    gaps: tuple[int, ...]
    delta: int
    conductor: int
    count: tuple[int, ...]
    descriptor: CuspDescriptor | None = None
    generators: tuple[int, ...] | None = None
    is_semigroup: bool = True
    symmetric: bool = field(default=True)

    def count_below(self, k: int) -> int:
        """``#S ∩ [0, k)``, zero for ``k <= 0``."""
        if k <= 0:
            return 0
        if k < len(self.count):
            return self.count[k]
        return k - self.delta

    def __contains__(self, k: int) -> bool:
        return k >= 0 and k not in set(self.gaps)


def _table_from_gaps(gaps: Sequence[int]) -> tuple[tuple[int, ...], int, int, tuple[int, ...]]:
    gaps = tuple(sorted(gaps))
    delta = len(gaps)
    conductor = gaps[-1] + 1 if gaps else 0
    gapset = set(gaps)
    count = [0]
    for k in range(conductor + 1):
        count.append(count[-1] + (0 if k in gapset else 1))
    return gaps, delta, conductor, tuple(count)


def is_symmetric(gaps: Sequence[int]) -> bool:
    """``k in S  <=>  2 delta - 1 - k not in S`` for ``0 <= k < 2 delta``."""
    gapset = set(gaps)
    d = len(gapset)
    return all((k in gapset) != ((2 * d - 1 - k) in gapset) for k in range(2 * d))


def build_semigroup(d: CuspDescriptor) -> SemigroupTable:
    """Normalize a descriptor into its :class:`SemigroupTable`.

    Semigroup-mode builds (generators, characteristic sequence) must be
    symmetric, as semigroups of plane curve cusps are; an asymmetric result
    raises :class:`DescriptorError`.  Gap-set mode is taken as given.
    """
    if d.kind == GAP_SET:
        gaps, delta, conductor, count = _table_from_gaps(d.values)
        return SemigroupTable(gaps, delta, conductor, count, descriptor=d,
                              generators=None, is_semigroup=False,
                              symmetric=is_symmetric(gaps))

    gens = d.values if d.kind == GENERATORS else char_to_generators(d.values)
    member, _ = semigroup_members(gens)
    gaps = [k for k, m in enumerate(member) if not m]
    gaps, delta, conductor, count = _table_from_gaps(gaps)
    if not is_symmetric(gaps):
        raise DescriptorError(
            f"semigroup of {d} is not symmetric (delta={delta}, conductor={conductor}); "
            "not the semigroup of a plane curve cusp")
    if d.kind == CHARACTERISTIC and 2 * delta != milnor_number_from_characteristic(d.values):
        raise InvariantViolation(
            "milnor-delta", f"{d}: 2*delta={2 * delta} differs from Milnor number")
    return SemigroupTable(gaps, delta, conductor, count, descriptor=d,
                          generators=minimal_generators(gaps), is_semigroup=True,
                          symmetric=True)


def delta(d: CuspDescriptor) -> int:
    return build_semigroup(d).delta


def seifert_genus(d: CuspDescriptor) -> int:
    """Seifert genus of the link of the cusp; coincides with delta."""
    return build_semigroup(d).delta


def alexander_from_gaps(gaps: Sequence[int]) -> tuple[int, ...]:
    """Dense coefficients (degree 0 first) of ``1 + (t - 1) * sum_{k in gaps} t^k``."""
    if not gaps:
        return (1,)
    top = max(gaps) + 1
    coeffs = [0] * (top + 1)
    coeffs[0] = 1
    for k in gaps:
        coeffs[k + 1] += 1
        coeffs[k] -= 1
    return tuple(coeffs)


def alexander(d: CuspDescriptor) -> tuple[int, ...]:
    """Alexander polynomial of the link, as a dense integer coefficient tuple.

    >>> alexander(CuspDescriptor.generators(2, 3))
    (1, -1, 1)
    """
    return alexander_from_gaps(build_semigroup(d).gaps)


def format_polynomial(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
