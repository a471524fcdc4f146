"""
balseg - balanced words and discrete segments

Exact counts of balanced words s(L,h) and balanced palindromes p(L,h),
their rational generating functions and asymptotic profiles.
"""
from .counting import (
    CountingEvaluator,
    p_affix_count,
    p_count,
    p_table,
    p_total,
    s_affix_count,
    s_count,
    s_L2_explicit,
    s_table,
    s_total,
)
from .errors import (
    BalsegError,
    InternalInconsistencyError,
    InvalidArgumentError,
    ResourceCapError,
    SeriesUndefinedError,
)
from .numtheory import totient, totient_sieve
from .ratfunc import (
    AsymptoticProfile,
    Polynomial,
    RationalFunction,
    asymptotic_profile,
    build_P_h,
    build_S_h,
    generating_function,
    series_coefficients,
)
from .words import (
    complement,
    enumerate_balanced,
    enumerate_balanced_palindromes,
    height,
    is_balanced,
    phi,
    render_path,
    reverse,
    theta,
)

__version__ = "1.0.0"
