"""F-pure thresholds of binary forms over finite fields via Deuring polynomials."""

from .deuring import (
    antiderivative_F,
    deuring_direct,
    deuring_eval,
    deuring_root_set,
    deuring_schur_product,
    legendre_poly,
    legendre_root_orbit,
    mobius_orbit,
    p_digits,
)
from .errors import (
    CapacityError,
    DivisionByZero,
    DomainError,
    FieldMismatch,
    FptError,
    ParityError,
    PrimalityError,
    RangeError,
)
from .fpt import (
    FormClass,
    FptValue,
    NuRecord,
    analyze,
    classify_form,
    cross_ratio,
    ft_bracket,
    ft_formula,
    lct_value,
    nu,
)
from .gf import FieldDesc, FieldElement, embed, make_field
from .poly import (
    BiForm,
    ProjPoint,
    UniPoly,
    central_coeff,
    form_pow_reduced,
    gcd,
    in_frobenius_ideal,
    roots_on_p1,
    uni_roots,
)
from .scan import (
    ScanQuery,
    ScanRecord,
    count_points_legendre_curve,
    is_supersingular,
    report,
    scan_primes,
)

__version__ = "0.1.0"
