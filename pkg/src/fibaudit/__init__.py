"""Exact binomial-transform calculus and Fibonacci-power identity auditing."""

from .ring import (
    ExactScalar,
    GoldenInt,
    NotDivisible,
    NotIntegral,
    NotRational,
    PHI,
    PSI,
    SQRT5,
    conjugate,
    div_sqrt5,
    ring_mul,
    ring_pow,
    to_integer,
)
from .sequences import (
    CoeffTable,
    RecurrenceMismatch,
    binomial,
    build_coeff_table,
    fib,
    lucas,
    q_coeff,
    s_coeff,
)
from .transforms import (
    DomainError,
    LengthMismatch,
    Seq,
    binomial_transform,
    corollary1_eval,
    corollary2_eval,
    inverse_transform,
    lemma2_lhs,
    lemma3_sum,
    nabla_direct,
    nabla_sum,
    theorem1_eval,
)
from .identities import (
    AuditEntry,
    AuditReport,
    IdentityFamily,
    PreconditionError,
    audit,
    closed_form_rhs,
    cross_power_expansion,
    fib_power_sum_binet,
    fib_power_sum_oracle,
    prop1_eval,
    remark1_relation,
)

__all__ = [
    "AuditEntry",
    "AuditReport",
    "CoeffTable",
    "DomainError",
    "ExactScalar",
    "GoldenInt",
    "IdentityFamily",
    "LengthMismatch",
    "NotDivisible",
    "NotIntegral",
    "NotRational",
    "PHI",
    "PSI",
    "PreconditionError",
    "RecurrenceMismatch",
    "SQRT5",
    "Seq",
    "audit",
    "binomial",
    "binomial_transform",
    "build_coeff_table",
    "closed_form_rhs",
    "conjugate",
    "corollary1_eval",
    "corollary2_eval",
    "cross_power_expansion",
    "div_sqrt5",
    "fib",
    "fib_power_sum_binet",
    "fib_power_sum_oracle",
    "inverse_transform",
    "lemma2_lhs",
    "lemma3_sum",
    "lucas",
    "nabla_direct",
    "nabla_sum",
    "prop1_eval",
    "q_coeff",
    "remark1_relation",
    "ring_mul",
    "ring_pow",
    "s_coeff",
    "theorem1_eval",
    "to_integer",
]

__version__ = "0.1.0"
