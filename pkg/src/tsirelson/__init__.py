"""Certified quantum (Tsirelson) and classical bounds for two-party
two-outcome correlation Bell inequalities."""

from .analytic import (
    chained_A_spectrum,
    chained_classical_bound,
    chained_dual_lambda,
    chained_primal_vectors,
    chained_quantum_bound,
    chsh_known_solution,
)
from .classical import ClassicalBound, lhv_bound
from .inequality import (
    CorrelationInequality,
    build_objective,
    chained,
    chsh,
    gisin,
    new_inequality,
    objective_value,
)
from .linalg import gram_from_vectors, min_eigenvalue, sym_eigen, vectors_from_gram
from .realization import (
    QuantumRealization,
    clifford_generators,
    correlation,
    inequality_value,
    realize,
)
from .sdp import (
    BoundReport,
    DualCertificate,
    PrimalSolution,
    SolveOptions,
    certify,
    extract_dual,
    solve,
    solve_primal,
)

__all__ = [
    "BoundReport",
    "ClassicalBound",
    "CorrelationInequality",
    "DualCertificate",
    "PrimalSolution",
    "QuantumRealization",
    "SolveOptions",
    "build_objective",
    "certify",
    "chained",
    "chained_A_spectrum",
    "chained_classical_bound",
    "chained_dual_lambda",
    "chained_primal_vectors",
    "chained_quantum_bound",
    "chsh",
    "chsh_known_solution",
    "clifford_generators",
    "correlation",
    "extract_dual",
    "gisin",
    "gram_from_vectors",
    "inequality_value",
    "lhv_bound",
    "min_eigenvalue",
    "new_inequality",
    "objective_value",
    "realize",
    "solve",
    "solve_primal",
    "sym_eigen",
    "vectors_from_gram",
]
