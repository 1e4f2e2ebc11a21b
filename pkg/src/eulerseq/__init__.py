"""Exact computation of the generalized Euler numbers ``E_{n,a}``, the
polynomials ``E_{n,a}(x)``, and machine checks of their identities and
prime-power congruences."""

from .congruences import SPECS, CongruenceReport, CongruenceSpec, DomainError, ScanReport, ord_p, rhs_value, scan, verify
from .exact import (
    NotInvertibleError,
    Poly,
    Residue,
    ResidueRing,
    TruncatedSeries,
    binomial,
    mod_inverse,
    mod_reduce,
    poly_eval,
    series_mul,
)
from .identities import (
    EulerPolynomial,
    IdentityReport,
    check_addition,
    check_complement,
    check_mixed_convolution,
    check_powersum_theorem,
    check_quartic,
    check_reflection,
    check_three_term,
    check_weighted_powersum,
    egf_residual,
    euler_polynomial,
    forward_transform,
    inverse_transform,
)
from .sequence import SequenceTable, build_table, euler_number, euler_number_mod, euler_number_poly

__version__ = "0.1.0"
