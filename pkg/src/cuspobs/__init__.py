"""Exact invariants of cuspidal singularities and obstructions to rational
cuspidal curve configurations on surfaces."""

__version__ = "0.1.0"

from .errors import (CuspObsError, DescriptorError, InputError, InvalidSurface,  # noqa: E402
                     InvariantViolation, LargenessError, SearchCapExceeded)
from .semigroup import (CuspDescriptor, SemigroupTable, alexander, build_semigroup,  # noqa: E402
                        char_to_generators, delta, seifert_genus)
from .rfunction import Configuration, RTable, codim_bound, r_table, r_value, witness  # noqa: E402
from .surgery import (SurgeryProblem, c1_squared, d_invariant, d_invariant_table,  # noqa: E402
                      os_bound, spinc_range)
from .lattice import (SurfaceData, arithmetic_genus, chi_divisor, chi_sheaf, cp2, h0,  # noqa: E402
                      hirzebruch, pair, required_genus, validate_surface)
from .obstruction import (CheckRequest, ScanSpec, Verdict, check_algebraic,  # noqa: E402
                          check_almost_complex, check_genus_feasibility, check_topological,
                          derivation_chain_check)

__all__ = [
    "CuspObsError", "DescriptorError", "InputError", "InvalidSurface", "InvariantViolation",
    "LargenessError", "SearchCapExceeded",
    "CuspDescriptor", "SemigroupTable", "alexander", "build_semigroup", "char_to_generators",
    "delta", "seifert_genus",
    "Configuration", "RTable", "codim_bound", "r_table", "r_value", "witness",
    "SurgeryProblem", "c1_squared", "d_invariant", "d_invariant_table", "os_bound", "spinc_range",
    "SurfaceData", "arithmetic_genus", "chi_divisor", "chi_sheaf", "cp2", "h0", "hirzebruch",
    "pair", "required_genus", "validate_surface",
    "CheckRequest", "ScanSpec", "Verdict", "check_algebraic", "check_almost_complex",
    "check_genus_feasibility", "check_topological", "derivation_chain_check",
]
