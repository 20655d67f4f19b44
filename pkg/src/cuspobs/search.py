"""Search over cusp configurations a curve class could carry.

Candidates are multisets of at most ``max_cusps`` catalog entries whose
deltas sum to at most the budget.  Only those whose total delta equals the
arithmetic genus of the curve (the rationality gate) are checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import CatalogEntry, cusp_catalog
from .errors import InputError, SearchCapExceeded
from .io import int_list, parse_flags, parse_surface
from .lattice import SurfaceData, require_valid, required_genus
from .obstruction import TOPOLOGICAL, CheckRequest, ScanSpec, check_genus_feasibility, run_check
from .report import ConfigurationReport, Report
from .rfunction import Configuration
from .semigroup import CuspDescriptor

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class SearchSpec:
    surface: SurfaceData
    C: tuple[int, ...]
    scan: ScanSpec
    mode: str = TOPOLOGICAL
    max_pairs: int = 1
    delta_budget: int | None = None
    max_cusps: int = 1
    cap: int = DEFAULT_CAP
    statement_form: bool = False
    assume_nonvanishing: bool = False

    def __post_init__(self):
        object.__setattr__(self, "C", self.surface.vec(self.C))
        if self.max_pairs not in (1, 2):
            raise InputError(f"maxPairs must be 1 or 2, got {self.max_pairs}")
        if self.max_cusps < 1 or self.cap < 1:
            raise InputError("maxCusps and cap must be positive")
        if self.delta_budget is not None and self.delta_budget < 0:
            raise InputError("deltaBudget must be >= 0")

    @classmethod
    def from_dict(cls, data: dict) -> "SearchSpec":
        for key in ("surface", "curve", "scan"):
            if key not in data:
                raise InputError(f"search spec is missing {key!r}")
        cat = data.get("catalog", {}) or {}
        return cls(surface=parse_surface(data["surface"]), C=tuple(int_list(data["curve"], "curve")),
                   scan=ScanSpec.from_dict(data["scan"]), mode=data.get("mode", TOPOLOGICAL),
                   max_pairs=int(cat.get("maxPairs", 1)),
                   delta_budget=cat.get("deltaBudget"),
                   max_cusps=int(cat.get("maxCusps", 1)),
                   cap=int(cat.get("cap", DEFAULT_CAP)),
                   **parse_flags(data))


def _multisets(catalog: list[CatalogEntry], budget: int, max_size: int, cap: int):
    """Nondecreasing index tuples with total delta <= budget, including ``()``."""
    count = 0

    def rec(start, remaining, size, prefix):
        nonlocal count
        count += 1
        if count > cap:
            raise SearchCapExceeded(f"more than {cap} candidate configurations; raise the cap "
                                    "or shrink the budget")
        yield prefix
        if size == max_size:
            return
        for i in range(start, len(catalog)):
            d = catalog[i].delta
            if d > remaining:
                break  # catalog is sorted by delta
            yield from rec(i, remaining - d, size + 1, prefix + (i,))

    yield from rec(0, budget, 0, ())


def run_search(spec: SearchSpec) -> tuple[list[ConfigurationReport], dict]:
    S = spec.surface
    findings = require_valid(S)
    target = required_genus(S, spec.C)
    budget = target if spec.delta_budget is None else int(spec.delta_budget)
    catalog = cusp_catalog(budget, spec.max_pairs) if budget > 0 else []

    survivors = []
    examined = 0
    for combo in _multisets(catalog, budget, spec.max_cusps, spec.cap):
        examined += 1
        if sum(catalog[i].delta for i in combo) == target:
            survivors.append(combo)

    def sort_key(combo):
        return [catalog[i].key for i in combo]

    reports = []
    for combo in sorted(survivors, key=sort_key):
        descriptors = ([catalog[i].descriptor for i in combo] if combo
                       else [CuspDescriptor.generators(1)])
        cfg = Configuration.from_descriptors(descriptors)
        req = CheckRequest(surface=S, C=spec.C, cfg=cfg, scan=spec.scan, mode=spec.mode,
                           statement_form=spec.statement_form,
                           assume_nonvanishing=spec.assume_nonvanishing)
        reports.append(ConfigurationReport(
            cusps=[d.to_dict() for d in descriptors], g=cfg.g,
            genus_feasibility=check_genus_feasibility(S, spec.C, cfg),
            verdicts=run_check(req)))
    stats = {"target_genus": target, "delta_budget": budget, "catalog_size": len(catalog),
             "candidates_examined": examined, "feasible": len(survivors),
             "infeasible": examined - len(survivors),
             "catalog": [str(e) for e in catalog]}
    return reports, {"findings": findings, "stats": stats}


def search_report(spec_dict: dict) -> Report:
    spec = SearchSpec.from_dict(spec_dict)
    configs, meta = run_search(spec)
    return Report(command="search", input=spec_dict, surface_findings=meta["findings"],
                  configurations=configs, extra={"search": meta["stats"]})
