"""Exact truncated q-series arithmetic for Ramanujan's general partition
function p_r(n), with finite-depth checks of partition congruences."""

from .congruence import (
    CongruenceClaim,
    VerifyReport,
    check_frobenius,
    check_identity_dissection5,
    check_jacobi,
    check_lemma_H5,
    check_ramanujan_pm4,
    scan,
    verify_claim,
    verify_theorem,
)
from .oracle import (
    OracleCount,
    classical_p,
    count_colour_partitions,
    count_signed_distinct,
)
from .products import (
    ProductSpec,
    eta_quotient,
    euler_phi,
    euler_product_ap,
    jacobi_cube,
    pr_series,
    rogers_ramanujan,
)
from .series import (
    EXACT,
    RingSpec,
    TruncSeries,
    add,
    coeff,
    component,
    dissect,
    equal_up_to,
    invert,
    make_series,
    mul,
    pow_int,
    reduce_mod,
    shift,
    substitute_power,
)

__version__ = "0.1.0"
