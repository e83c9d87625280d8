from enum import Enum


class DegreeMode(str, Enum):
    """Degree condition checked by validate_degrees."""
    BOUNDED = "bounded"
    BOUNDED_BIPARTITE = "bounded_bipartite"
    BIREGULAR = "biregular"


class ParamsMode(str, Enum):
    """Which regime produced a subsampling parameter ledger."""
    FULL_SCALE = "full_scale"       # formulas only, d_A, d_B >= d_0
    DESK_SCALE = "desk_scale"       # overrides or small degrees


class EvalMode(str, Enum):
    """How a probability or expectation is evaluated."""
    BOUND = "bound"
    EXACT = "exact"
    MONTE_CARLO = "monte_carlo"


class DecompositionMode(str, Enum):
    """Forest decomposition flavour."""
    EXACT = "exact"               # marginals exactly 2/(d+1)
    ARBORICITY = "arboricity"     # ceil((d+1)/2) forests, uniform


class PipelineKind(str, Enum):
    """End-to-end pipelines."""
    UG_2CSP = "ug_2csp"
    NP_2CSP = "np_2csp"
    UG_CLAWFREE = "ug_clawfree"
    NP_CLAWFREE = "np_clawfree"
    APPROX = "approx"


class FunctionKind(str, Enum):
    """Test functions for the dictatorship test."""
    DICTATOR = "dictator"
    CONSTANT = "constant"
    RANDOM = "random"
    FILE = "file"
