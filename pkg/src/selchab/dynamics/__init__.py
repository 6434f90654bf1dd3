from .iterates import (
    IterPoly,
    ThreeAdicCertificate,
    cofactor,
    divisors,
    iter_poly,
    mobius,
    prime_factors,
    rigid_divisibility_check,
    three_adic_square_certificate,
    value_table,
)
from .reduction import (
    FactsDB,
    ReductionCase,
    ReductionPlan,
    irreducibility_chain,
    link_status,
    reduce_square_question,
)
from .discriminants import discriminant_check
