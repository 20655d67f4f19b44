"""Numerical model of a surface: intersection lattice, canonical class and the
characteristic numbers derived from them.

Classes are integer coordinate vectors in the basis the gram matrix is
written in.  Presets ship fixed bases:

* ``cp2``: the line class ``H``; ``K = -3H``.
* ``hirzebruch:e``: fiber ``F`` then negative section ``B`` (``F^2 = 0``,
  ``F.B = 1``, ``B^2 = -e``); ``K = -(2 + e)F - 2B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .errors import InputError, InvalidSurface, ParityError

PROJECTIVE = "projective"
ALMOST_COMPLEX = "almost-complex"

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Finding:
    name: str
    holds: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "detail": self.detail}

    @classmethod
    def from_dict(cls, data: dict) -> "Finding":
        return cls(data["name"], bool(data["holds"]), data["detail"])


@dataclass(frozen=True)
class SurfaceData:
    gram: tuple[tuple[int, ...], ...]
    K: Vector
    b1: int = 0
    pg: int = 0
    kind: str = PROJECTIVE
    preset: str | None = None
    h0_table: Mapping[Vector, int] | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "gram", tuple(tuple(int(x) for x in row) for row in self.gram))
        object.__setattr__(self, "K", tuple(int(x) for x in self.K))
        if self.kind not in (PROJECTIVE, ALMOST_COMPLEX):
            raise InputError(f"unknown surface kind {self.kind!r}")
        if self.b1 < 0 or self.pg < 0:
            raise InputError("b1 and pg must be nonnegative")
        if self.h0_table is not None:
            table = {tuple(int(x) for x in k): int(v) for k, v in self.h0_table.items()}
            object.__setattr__(self, "h0_table", table)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def label(self) -> str:
        return self.preset or f"lattice(rank={self.rank})"

    def vec(self, coords: Sequence[int]) -> Vector:
        v = tuple(int(x) for x in coords)
        if len(v) != self.rank:
            raise InputError(f"class {list(v)} has {len(v)} coordinates, lattice rank is {self.rank}")
        return v


def cp2() -> SurfaceData:
    return SurfaceData(gram=((1,),), K=(-3,), b1=0, pg=0, preset="cp2")


def hirzebruch(e: int) -> SurfaceData:
    if e < 0:
        raise InputError(f"Hirzebruch index must be >= 0, got {e}")
    return SurfaceData(gram=((0, 1), (1, -e)), K=(-(2 + e), -2), b1=0, pg=0,
                       preset=f"hirzebruch:{e}")


def from_preset(name: str) -> SurfaceData:
    """Resolve ``"cp2"`` or ``"hirzebruch:e"``."""
    if name == "cp2":
        return cp2()
    if name.startswith("hirzebruch:"):
        try:
            e = int(name.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad Hirzebruch preset {name!r}") from None
        return hirzebruch(e)
    raise InputError(f"unknown surface preset {name!r}")


def _hirzebruch_e(S: SurfaceData) -> int | None:
    if S.preset and S.preset.startswith("hirzebruch:"):
        return int(S.preset.split(":", 1)[1])
    return None


def pair(S: SurfaceData, A: Sequence[int], B: Sequence[int]) -> int:
    """Intersection number ``A . B``."""
    a, b = S.vec(A), S.vec(B)
    return sum(a[i] * S.gram[i][j] * b[j] for i in range(S.rank) for j in range(S.rank))


def add(*vs: Sequence[int]) -> Vector:
    return tuple(sum(x) for x in zip(*vs))


def scale(c: int, v: Sequence[int]) -> Vector:
    return tuple(c * x for x in v)


def sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def inertia(gram: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of a symmetric form, by exact
    congruence diagonalization over the rationals."""
    A = [[Fraction(x) for x in row] for row in gram]
    pos = neg = zero = 0
    while A:
        n = len(A)
        if A[0][0] == 0:
            j = next((j for j in range(1, n) if A[j][j] != 0), None)
            if j is not None:
                A[0], A[j] = A[j], A[0]
                for row in A:
                    row[0], row[j] = row[j], row[0]
            else:
                j = next((j for j in range(1, n) if A[0][j] != 0), None)
                if j is None:
                    zero += 1
                    A = [row[1:] for row in A[1:]]
                    continue
                # replace e_0 by e_0 + e_j, making the pivot 2 A[0][j] != 0
                for k in range(n):
                    A[0][k] += A[j][k]
                for k in range(n):
                    A[k][0] += A[k][j]
        p = A[0][0]
        if p > 0:
            pos += 1
        else:
            neg += 1
        A = [[A[i][k] - A[i][0] * A[0][k] / p for k in range(1, n)] for i in range(1, n)]
    return pos, neg, zero


def signature(S: SurfaceData) -> int:
    pos, neg, _ = inertia(S.gram)
    return pos - neg


def b2_plus(S: SurfaceData) -> int:
    return inertia(S.gram)[0]


def euler_characteristic(S: SurfaceData) -> int:
    """Topological Euler characteristic ``2 - 2 b1 + b2`` (``b3 = b1``)."""
    return 2 - 2 * S.b1 + S.rank


def chi_sheaf(S: SurfaceData) -> int:
    """Holomorphic Euler characteristic ``1 - b1/2 + pg``."""
    if S.b1 % 2:
        raise InputError(f"b1 = {S.b1} is odd; irregularity b1/2 undefined")
    return 1 - S.b1 // 2 + S.pg


def _half(value: int, what: str) -> int:
    if value % 2:
        raise ParityError(f"{what} = {value} is odd; K is not characteristic")
    return value // 2


def chi_divisor(S: SurfaceData, D: Sequence[int]) -> int:
    """Riemann-Roch: ``chi(D) = D.(D - K)/2 + chi(O_X)``."""
    D = S.vec(D)
    return _half(pair(S, D, sub(D, S.K)), "D.(D-K)") + chi_sheaf(S)


def arithmetic_genus(S: SurfaceData, C: Sequence[int]) -> int:
    """``p_a(C) = C.(C + K)/2 + 1`` (adjunction)."""
    C = S.vec(C)
    return _half(pair(S, C, add(C, S.K)), "C.(C+K)") + 1


def required_genus(S: SurfaceData, C: Sequence[int]) -> int:
    """Total delta ``g(J)`` a rational cuspidal curve in class ``C`` must carry.

    A rational curve has geometric genus 0, so the deltas of its cusps
    add up to the arithmetic genus.
    """
    return arithmetic_genus(S, C)


def h0(S: SurfaceData, D: Sequence[int]) -> int | None:
    """``h^0(O(D))`` from the surface's oracle, or ``None`` when unavailable.

    Presets count lattice points: on ``CP^2`` the monomials of degree ``j``;
    on ``F_e`` the class ``bF + aB`` has ``sum_{i=0}^{a} max(0, b - i e + 1)``
    sections (zero for ``a < 0``).  Other surfaces use ``h0_table``.
    """
    D = S.vec(D)
    if S.preset == "cp2":
        j, = D
        return comb(j + 2, 2) if j >= 0 else 0
    e = _hirzebruch_e(S)
    if e is not None:
        b, a = D
        if a < 0:
            return 0
        return sum(max(0, b - i * e + 1) for i in range(a + 1))
    if S.h0_table is not None and D in S.h0_table:
        return S.h0_table[D]
    return None


def is_effective(S: SurfaceData, D: Sequence[int]) -> bool | None:
    """Whether ``|D|`` is nonempty, when the oracle knows ``h^0(D)``."""
    value = h0(S, D)
    return None if value is None else value > 0


def validate_surface(S: SurfaceData) -> list[Finding]:
    """Check the lattice-level identities a surface of the declared kind obeys.

    Findings are returned, never raised; see :func:`require_valid`.
    """
    n = S.rank
    out: list[Finding] = []
    shape_ok = n > 0 and all(len(row) == n for row in S.gram) and len(S.K) == n
    out.append(Finding("dimensions", shape_ok,
                       f"gram {n}x{[len(r) for r in S.gram]}, K has {len(S.K)} entries"))
    if not shape_ok:
        return out
    sym = all(S.gram[i][j] == S.gram[j][i] for i in range(n) for j in range(n))
    out.append(Finding("gram-symmetric", sym, "gram == gram^T" if sym else "gram is not symmetric"))
    if not sym:
        return out
    pos, neg, zero = inertia(S.gram)
    out.append(Finding("nondegenerate", zero == 0, f"inertia (+{pos}, -{neg}, 0:{zero})"))

    basis = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    bad = [k for k, x in enumerate(basis) if (pair(S, S.K, x) - pair(S, x, x)) % 2]
    out.append(Finding("K-characteristic", not bad,
                       "K.x = x.x mod 2 on every basis vector" if not bad
                       else f"K.x != x.x mod 2 for basis vectors {bad}"))

    sigma = pos - neg
    chi = euler_characteristic(S)
    k2 = pair(S, S.K, S.K)
    out.append(Finding("signature-formula", k2 == 3 * sigma + 2 * chi,
                       f"K^2 = {k2}, 3*sigma + 2*chi = 3*{sigma} + 2*{chi} = {3 * sigma + 2 * chi}"))

    if S.kind == PROJECTIVE:
        out.append(Finding("b2plus", pos == S.pg + 1, f"b2+ = {pos}, pg + 1 = {S.pg + 1}"))
        out.append(Finding("b1-even", S.b1 % 2 == 0, f"b1 = {S.b1}"))
    else:
        out.append(Finding("b2plus", pos == 1, f"b2+ = {pos}, required 1"))
    return out


def require_valid(S: SurfaceData) -> list[Finding]:
    findings = validate_surface(S)
    failed = [f for f in findings if not f.holds]
    if failed:
        names = ", ".join(f"{f.name} ({f.detail})" for f in failed)
        raise InvalidSurface(f"surface {S.label} fails validation: {names}", findings)
    return findings
