"""Spin^c structures and d-invariants of large surgeries on sums of algebraic knots.

All values are exact :class:`fractions.Fraction`; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, LargenessError
from .rfunction import Configuration, r_value


@dataclass(frozen=True)
class SurgeryProblem:
    """``q``-surgery on the connected sum of the links of ``cfg``; requires ``q > 2g``."""

    cfg: Configuration
    q: int

    def __post_init__(self):
        if self.q <= 0:
            raise InputError(f"surgery coefficient must be positive, got {self.q}")
        if self.q <= 2 * self.cfg.g:
            raise LargenessError(
                f"q = {self.q} is not larger than 2g = {2 * self.cfg.g}; "
                "the closed d-invariant formula does not apply")

    @property
    def g(self) -> int:
        return self.cfg.g


def spinc_range(q: int) -> list[int]:
    """Integers ``m`` with ``-q/2 <= m < q/2``, ascending."""
    if q <= 0:
        raise InputError(f"q must be >= 1, got {q}")
    lo = -(q // 2)          # ceil(-q/2)
    hi = (q + 1) // 2       # first integer >= q/2
    return list(range(lo, hi))


def in_spinc_range(q: int, m: int) -> bool:
    return -q <= 2 * m < q


def c1_squared(q: int, m: int) -> Fraction:
    """Self-intersection ``(q - 2m)^2 / q`` of ``c_1(t_m)`` on the trace of the surgery."""
    return Fraction((q - 2 * m) ** 2, q)


def d_invariant(prob: SurgeryProblem, m: int) -> Fraction:
    """``d(S^3_q(J), s_m) = ((q-2m)^2 - q)/(4q) - 2 (R(m+g) - m)``.

    ``R`` is taken with its extension ``R(k) = 0`` for ``k <= 0``, which is
    what keeps the values invariant under ``m -> -m``.
    """
    q = prob.q
    if not in_spinc_range(q, m):
        raise InputError(f"spin^c index m = {m} outside [-{q}/2, {q}/2)")
    lens = Fraction((q - 2 * m) ** 2 - q, 4 * q)
    return lens - 2 * (r_value(prob.cfg, m + prob.g) - m)


def d_invariant_table(prob: SurgeryProblem) -> dict[int, Fraction]:
    return {m: d_invariant(prob, m) for m in spinc_range(prob.q)}


def os_bound(c1sq, sigma_w: int, chi_w: int) -> Fraction:
    """Lower bound ``(c_1^2 - 3 sigma(W) - 2 chi(W)) / 4`` on a d-invariant
    bounded by a negative definite ``W``."""
    return (Fraction(c1sq) - 3 * sigma_w - 2 * chi_w) / 4
