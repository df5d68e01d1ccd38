"""Exact symbolic verification for the loop algebra of a rational
quantum torus and its derivations, and for the twisted modules V (x) C_q.

Everything is computed in cyclotomic fields with rational coordinates;
there are no floats anywhere in the algebra, so every verified identity
holds exactly.
"""

from .cocycle import CocycleContext, ContextError
from .cyclotomic import (
    Cyclotomic,
    CyclotomicField,
    cyclotomic_field,
    cyclotomic_polynomial,
    format_scalar,
)
from .fock import (
    FVector,
    ModuleParams,
    act,
    cyclicity_probe,
    proj0,
    weight_decompose,
)
from .gln import GlnModule, commutation_witness, module_from_spec, validate
from .loop import (
    BAlgebra,
    BElement,
    GElement,
    LoopElement,
    cq2_embed,
    g_bracket,
    loop_D,
    loop_ad,
    loop_t,
    tau_bracket,
)
from .scenario import Scenario, ScenarioError, build, load_scenario, parse_scenario
from .syntax import ParseError, evaluate, format_value, parse_expression
from .torus import TorusElement, commutator_witness

__version__ = "0.1.0"

__all__ = [
    "BAlgebra",
    "BElement",
    "CocycleContext",
    "ContextError",
    "Cyclotomic",
    "CyclotomicField",
    "FVector",
    "GElement",
    "GlnModule",
    "LoopElement",
    "ModuleParams",
    "ParseError",
    "Scenario",
    "ScenarioError",
    "TorusElement",
    "act",
    "build",
    "commutation_witness",
    "commutator_witness",
    "cq2_embed",
    "cyclicity_probe",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "evaluate",
    "format_scalar",
    "format_value",
    "g_bracket",
    "load_scenario",
    "loop_D",
    "loop_ad",
    "loop_t",
    "module_from_spec",
    "parse_expression",
    "parse_scenario",
    "proj0",
    "tau_bracket",
    "validate",
    "weight_decompose",
    "__version__",
]
