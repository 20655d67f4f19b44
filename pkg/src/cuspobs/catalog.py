"""Finite catalogs of cusp types, ordered by (delta, characteristic sequence)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .semigroup import CuspDescriptor, build_semigroup, milnor_number_from_characteristic


@dataclass(frozen=True, order=True)
class CatalogEntry:
    delta: int
    key: tuple[int, ...]

    @property
    def descriptor(self) -> CuspDescriptor:
        if len(self.key) == 2:
            return CuspDescriptor.generators(*self.key)
        return CuspDescriptor.characteristic(*self.key)

    def __str__(self):
        return str(self.descriptor)


def _one_pair(max_delta: int):
    p = 2
    while (p - 1) * p // 2 <= max_delta:
        q = p + 1
        while (p - 1) * (q - 1) // 2 <= max_delta:
            if gcd(p, q) == 1:
                yield CatalogEntry((p - 1) * (q - 1) // 2, (p, q))
            q += 1
        p += 1


def _two_pairs(max_delta: int):
    mu_max = 2 * max_delta
    b0 = 4
    # smallest Milnor number with beta_0 = b0 is at least b0 * (b0 / 2)
    while b0 * (b0 // 2) <= mu_max:
        b1 = b0 + 1
        while (b1 - 1) * 1 <= mu_max:
            e1 = gcd(b0, b1)
            if 1 < e1 < b0:
                if (b1 - 1) * (b0 - e1) > mu_max:
                    b1 += 1
                    continue
                b2 = b1 + 1
                while True:
                    mu = milnor_number_from_characteristic((b0, b1, b2))
                    if mu > mu_max:
                        break
                    if gcd(e1, b2) == 1:
                        yield CatalogEntry(mu // 2, (b0, b1, b2))
                    b2 += 1
            b1 += 1
        b0 += 1


def cusp_catalog(max_delta: int, max_pairs: int = 1) -> list[CatalogEntry]:
    """All cusp types with at most ``max_pairs`` characteristic pairs and
    ``1 <= delta <= max_delta``, sorted by ``(delta, key)``."""
    if max_pairs not in (1, 2):
        raise ValueError(f"max_pairs must be 1 or 2, got {max_pairs}")
    entries = list(_one_pair(max_delta))
    if max_pairs == 2:
        entries.extend(_two_pairs(max_delta))
    return sorted(entries)


def verify_entry(entry: CatalogEntry) -> bool:
    """The catalog's delta agrees with a full semigroup build."""
    return build_semigroup(entry.descriptor).delta == entry.delta
