"""Table-free trigonometry on dyadic rationals.

Forward functions unwind a nested radical whose signs come from a binary
search signature; inverse functions recover the exact dyadic argument by
repeated squaring.  Baselines, error metrics, and a CLI round out the
package.
"""

from .baselines import CordicTable, cordic_atan, cordic_rotate, cordic_table, taylor_cos
from .dyadic import (
    MAX_EXP,
    ONE,
    ZERO,
    DyadicRational,
    QuadratureFrame,
    from_fraction,
    normalize,
    parse_dyadic,
    quadrature,
)
from .errors import (
    DepthError,
    DomainError,
    NonDyadicError,
    PoleError,
    PrecisionOverflowError,
    SeedMismatchError,
)
from .forward import (
    TrigKind,
    dyadic_loop,
    forward,
    full_circle,
    radical_unwind,
    radical_unwind_truncated,
)
from .intmath import MAXBIT, MAXSTART, MAXVAL, isqrt, rational_sqrt, sqrt_start
from .inverse import (
    DEFAULT_CONFIG,
    InverseConfig,
    InverseKind,
    InverseResult,
    find5,
    inverse,
    naive_inverse,
)
from .metrics import (
    BENCH_TAGS,
    ErrorStats,
    SweepRow,
    bench,
    depth_sweep,
    error_stats,
    rows_to_csv,
    sweep,
)
from .signature import (
    MAX_DEPTH,
    SignatureWord,
    SigSeed,
    build_signature,
    level_signs,
    sign_oracle,
    unprimed_bits,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DEPTH",
    "MAX_EXP",
    "MAXBIT",
    "MAXSTART",
    "MAXVAL",
    "ONE",
    "ZERO",
    "BENCH_TAGS",
    "CordicTable",
    "DEFAULT_CONFIG",
    "DepthError",
    "DomainError",
    "DyadicRational",
    "ErrorStats",
    "InverseConfig",
    "InverseKind",
    "InverseResult",
    "NonDyadicError",
    "PoleError",
    "PrecisionOverflowError",
    "QuadratureFrame",
    "SeedMismatchError",
    "SigSeed",
    "SignatureWord",
    "SweepRow",
    "TrigKind",
    "bench",
    "build_signature",
    "cordic_atan",
    "cordic_rotate",
    "cordic_table",
    "depth_sweep",
    "dyadic_loop",
    "error_stats",
    "find5",
    "forward",
    "from_fraction",
    "full_circle",
    "inverse",
    "isqrt",
    "level_signs",
    "naive_inverse",
    "normalize",
    "parse_dyadic",
    "quadrature",
    "radical_unwind",
    "radical_unwind_truncated",
    "rational_sqrt",
    "rows_to_csv",
    "sign_oracle",
    "sqrt_start",
    "sweep",
    "taylor_cos",
    "unprimed_bits",
]
