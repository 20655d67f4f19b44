"""Obstruction criteria for cusp configurations on a curve class.

Three criteria are evaluated divisor by divisor over a scan:

``algebraic``
    ``R(C.D + 1) >= h^0(D)`` whenever ``C.D >= 0`` and no section of
    ``O(D)`` vanishes identically on ``C``.
``topological``
    ``R(C.D + 1) >= chi(D) + b1/2`` for ``C.D + 1`` in ``[0, 2g]``, on
    surfaces with ``pg = 0``, for ``C^2 > 0`` and ``K.C <= 1``.
``almost-complex``
    ``R(C.E + 1) >= E.(E - K)/2 + 1`` for ``C.E`` in ``[0, 2g]`` when
    ``b2+ = 1`` and ``2g < C^2``.  The right-hand side ``E.(E + K)/2`` is
    available behind ``statement_form``; both are always reported.

A verdict is ``FAIL`` only when every hypothesis holds and the inequality
is violated.  Divisors whose hypotheses are not met are ``SKIPPED`` with a
reason, never counted as passing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Sequence

from .errors import InputError, ParityError
from .lattice import (Finding, SurfaceData, add, b2_plus, chi_divisor, euler_characteristic,
                      h0, pair, require_valid, required_genus, arithmetic_genus, scale,
                      signature, sub)
from .rfunction import Configuration, r_value
from .surgery import c1_squared, os_bound

ALGEBRAIC = "algebraic"
TOPOLOGICAL = "topological"
ALMOST_COMPLEX = "almost-complex"
MODES = (ALGEBRAIC, TOPOLOGICAL, ALMOST_COMPLEX)

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class ScanSpec:
    """Divisor classes to test: an explicit list, a ray ``j * direction`` for
    ``j`` in ``[start, stop]``, or a coordinate box of inclusive ranges."""

    kind: str
    classes_: tuple[tuple[int, ...], ...] = ()
    direction: tuple[int, ...] = ()
    start: int = 0
    stop: int = 0
    ranges: tuple[tuple[int, int], ...] = ()

    @classmethod
    def explicit(cls, classes) -> "ScanSpec":
        return cls("list", classes_=tuple(tuple(c) for c in classes))

    @classmethod
    def ray(cls, direction, start: int, stop: int) -> "ScanSpec":
        return cls("ray", direction=tuple(direction), start=start, stop=stop)

    @classmethod
    def box(cls, ranges) -> "ScanSpec":
        return cls("box", ranges=tuple((int(lo), int(hi)) for lo, hi in ranges))

    def classes(self) -> list[tuple[int, ...]]:
        if self.kind == "list":
            out = list(self.classes_)
        elif self.kind == "ray":
            out = [scale(j, self.direction) for j in range(self.start, self.stop + 1)]
        elif self.kind == "box":
            out = list(itertools.product(*(range(lo, hi + 1) for lo, hi in self.ranges)))
        else:
            raise InputError(f"unknown scan kind {self.kind!r}")
        if not out:
            raise InputError("scan is empty")
        return out

    def to_dict(self) -> dict:
        if self.kind == "list":
            return {"list": [list(c) for c in self.classes_]}
        if self.kind == "ray":
            return {"ray": {"direction": list(self.direction), "from": self.start, "to": self.stop}}
        return {"box": [list(r) for r in self.ranges]}

    @classmethod
    def from_dict(cls, data: dict) -> "ScanSpec":
        if not isinstance(data, dict) or len(data) != 1:
            raise InputError(f"scan must have exactly one of list/ray/box, got {data!r}")
        (kind, body), = data.items()
        try:
            if kind == "list":
                return cls.explicit(body)
            if kind == "ray":
                return cls.ray(body["direction"], int(body["from"]), int(body["to"]))
            if kind == "box":
                return cls.box(body)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed {kind} scan: {exc}") from None
        raise InputError(f"unknown scan kind {kind!r}")


@dataclass(frozen=True)
class CheckRequest:
    surface: SurfaceData
    C: tuple[int, ...]
    cfg: Configuration
    scan: ScanSpec
    mode: str = TOPOLOGICAL
    statement_form: bool = False
    assume_nonvanishing: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        object.__setattr__(self, "C", self.surface.vec(self.C))


@dataclass(frozen=True)
class Verdict:
    D: tuple[int, ...]
    lhs: int | None
    rhs: int | None
    status: str
    reason: str | None = None
    assumptions: tuple[Finding, ...] = ()
    notes: dict = field(default_factory=dict, compare=True, hash=False)

    @property
    def margin(self) -> int | None:
        if self.lhs is None or self.rhs is None:
            return None
        return self.lhs - self.rhs

    def to_dict(self) -> dict:
        return {
            "D": list(self.D),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "status": self.status,
            "reason": self.reason,
            "assumptions": [a.to_dict() for a in self.assumptions],
            "notes": dict(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        return cls(D=tuple(data["D"]), lhs=data["lhs"], rhs=data["rhs"],
                   status=data["status"], reason=data["reason"],
                   assumptions=tuple(Finding.from_dict(a) for a in data["assumptions"]),
                   notes=dict(data.get("notes", {})))


def _decide(D, lhs, rhs, assumptions, notes=None) -> Verdict:
    failed = [a for a in assumptions if not a.holds]
    if failed:
        status, reason = SKIPPED, failed[0].name
    elif rhs is None:
        status, reason = SKIPPED, "no-oracle"
    else:
        status, reason = (PASS if lhs >= rhs else FAIL), None
    return Verdict(tuple(D), lhs, rhs, status, reason, tuple(assumptions), notes or {})


@dataclass(frozen=True)
class GenusFeasibility:
    holds: bool
    config_genus: int
    required_genus: int

    @property
    def status(self) -> str:
        return PASS if self.holds else FAIL

    def to_dict(self) -> dict:
        return {"status": self.status, "config_genus": self.config_genus,
                "required_genus": self.required_genus}

    @classmethod
    def from_dict(cls, data: dict) -> "GenusFeasibility":
        return cls(data["status"] == PASS, data["config_genus"], data["required_genus"])


def check_genus_feasibility(S: SurfaceData, C: Sequence[int], cfg: Configuration) -> GenusFeasibility:
    """A rational curve in class ``C`` needs ``sum delta_i = p_a(C)``."""
    need = required_genus(S, C)
    return GenusFeasibility(cfg.g == need, cfg.g, need)


def check_topological(req: CheckRequest) -> list[Verdict]:
    S, C, cfg = req.surface, req.C, req.cfg
    require_valid(S)
    g = cfg.g
    c2 = pair(S, C, C)
    kc = pair(S, S.K, C)
    feas = check_genus_feasibility(S, C, cfg)
    globals_ = [
        Finding("pg=0", S.pg == 0, f"pg = {S.pg}"),
        Finding("C^2>0", c2 > 0, f"C^2 = {c2}"),
        Finding("K.C<=1", kc <= 1, f"K.C = {kc}"),
        Finding("genus-feasible", feas.holds,
                f"sum delta = {feas.config_genus}, p_a(C) = {feas.required_genus}"),
    ]
    half_b1 = S.b1 // 2
    out = []
    for D in req.scan.classes():
        D = S.vec(D)
        arg = pair(S, C, D) + 1
        window = Finding("window", 0 <= arg <= 2 * g, f"C.D+1 = {arg}, window [0, {2 * g}]")
        rhs = chi_divisor(S, D) + half_b1
        out.append(_decide(D, r_value(cfg, arg), rhs, globals_ + [window]))
    return out


def _nonvanishing(S: SurfaceData, C, D, asserted: bool) -> Finding:
    diff = sub(D, C)
    if S.preset == "cp2":
        return Finding("non-vanishing", D[0] < C[0],
                       f"deg D = {D[0]} {'<' if D[0] < C[0] else '>='} deg C = {C[0]}")
    if S.preset is not None:
        sections = h0(S, diff)
        return Finding("non-vanishing", sections == 0,
                       f"h0(D - C) = {sections}; D - C "
                       f"{'outside' if sections == 0 else 'inside'} the effective cone")
    return Finding("non-vanishing", asserted,
                   "user assertion" if asserted else "not asserted for a user lattice")


def check_algebraic(req: CheckRequest) -> list[Verdict]:
    S, C, cfg = req.surface, req.C, req.cfg
    require_valid(S)
    pa = arithmetic_genus(S, C)
    genus_bound = Finding("genus-bound", cfg.g <= pa, f"sum delta = {cfg.g}, p_a(C) = {pa}")
    out = []
    for D in req.scan.classes():
        D = S.vec(D)
        cd = pair(S, C, D)
        assumptions = [
            genus_bound,
            Finding("C.D>=0", cd >= 0, f"C.D = {cd}"),
            _nonvanishing(S, C, D, req.assume_nonvanishing),
        ]
        out.append(_decide(D, r_value(cfg, cd + 1), h0(S, D), assumptions))
    return out


def check_almost_complex(req: CheckRequest) -> list[Verdict]:
    S, C, cfg = req.surface, req.C, req.cfg
    require_valid(S)
    g = cfg.g
    c2 = pair(S, C, C)
    bplus = b2_plus(S)
    globals_ = [
        Finding("b2+=1", bplus == 1, f"b2+ = {bplus}"),
        Finding("largeness", 2 * g < c2, f"2g = {2 * g}, C^2 = {c2}"),
    ]
    out = []
    for E in req.scan.classes():
        E = S.vec(E)
        ce = pair(S, C, E)
        window = Finding("window", 0 <= ce <= 2 * g, f"C.E = {ce}, window [0, {2 * g}]")
        proof_rhs = pair(S, E, sub(E, S.K)) // 2 + 1
        statement_rhs = pair(S, E, add(E, S.K)) // 2
        rhs = statement_rhs if req.statement_form else proof_rhs
        notes = {"rhs_proof_form": proof_rhs, "rhs_statement_form": statement_rhs,
                 "selected": "statement" if req.statement_form else "proof"}
        out.append(_decide(E, r_value(cfg, ce + 1), rhs, globals_ + [window], notes))
    return out


def run_check(req: CheckRequest) -> list[Verdict]:
    return {ALGEBRAIC: check_algebraic, TOPOLOGICAL: check_topological,
            ALMOST_COMPLEX: check_almost_complex}[req.mode](req)


def summarize(verdicts: Sequence[Verdict]) -> str:
    statuses = {v.status for v in verdicts}
    if FAIL in statuses:
        return "obstructed"
    if PASS in statuses:
        return "not-obstructed"
    return "skipped-only"


@dataclass(frozen=True)
class ChainCheck:
    holds: bool
    details: dict


def derivation_chain_check(S: SurfaceData, C: Sequence[int], cfg: Configuration,
                           Dp: Sequence[int]) -> ChainCheck:
    """Verify that the three forms of the d-invariant inequality agree.

    With ``g = C.(C+K)/2 + 1``, spin^c index ``m = C.D' + g - 1`` and
    ``D = C + K + D'``, the pairs (argument of R, right-hand side)

    * ``(m + g, D'.(D'+K)/2 + 1 + m)``,
    * ``(C.D' + C.(C+K) + 1, D'.(D'+K)/2 + C.D' + C.(C+K)/2 + 1)``,
    * ``(C.D + 1, D.(D-K)/2 + 1)``

    must coincide.  When ``C^2 > 0`` the bound is also rebuilt from the
    Ozsvath-Szabo inequality with the surface's own signature and Euler
    characteristic, and its integer ceiling must match.
    """
    C, Dp = S.vec(C), S.vec(Dp)
    K = S.K
    try:
        g = required_genus(S, C)
        cdp = pair(S, C, Dp)
        cck = pair(S, C, add(C, K))
        half_dp = pair(S, Dp, add(Dp, K))
        if half_dp % 2:
            raise ParityError(f"D'.(D'+K) = {half_dp} is odd")
        half_dp //= 2
    except ParityError as exc:
        return ChainCheck(False, {"error": str(exc)})

    m = cdp + g - 1
    D = add(C, K, Dp)
    forms = [
        (m + g, half_dp + 1 + m),
        (cdp + cck + 1, half_dp + cdp + cck // 2 + 1),
        (pair(S, C, D) + 1, pair(S, D, sub(D, K)) // 2 + 1),
    ]
    holds = len(set(forms)) == 1
    details = {"m": m, "g": g, "D": list(D), "forms": [list(f) for f in forms],
               "R": [r_value(cfg, a) for a, _ in forms]}

    q = pair(S, C, C)
    if q > 0:
        sigma, chi = signature(S), euler_characteristic(S)
        c1_total = pair(S, add(K, scale(2, Dp)), add(K, scale(2, Dp)))
        c1_w = c1_total - c1_squared(q, m)
        lens = Fraction((q - 2 * m) ** 2 - q, 4 * q)
        bound = (os_bound(c1_w, sigma - 1, chi - 2) + lens) / 2
        details["os_bound"] = str(bound)
        details["os_ceiling"] = ceil(bound)
        holds = holds and ceil(bound) == half_dp + 1
    return ChainCheck(holds, details)
