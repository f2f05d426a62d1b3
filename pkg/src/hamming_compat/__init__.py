"""Hamming compatible metrics on words over a finite alphabet.

The centerpiece is ``d2(u, v) = truncated_hamming(u, v) + ceil(|l(u) - l(v)| / 2)``,
the smallest uniform Hamming compatible metric.  The package provides the
metrics, exhaustive bounded checks of their properties, and d2-sphere sizes.
"""

from .axioms import (
    AxiomReport,
    find_dn_violation,
    verify_hamming_characterization,
    verify_hamming_compatible,
    verify_metric_axioms,
)
from .counterexamples import (
    OverrideMetric,
    PivotMetric,
    load_override_metric,
    metric_example_411,
    metric_example_412,
)
from .errors import (
    CapExceeded,
    HammingCompatError,
    InvalidAlphabet,
    InvalidParameter,
    LengthMismatch,
    NoLengthBound,
    UnknownMetric,
    UnknownSymbol,
)
from .metrics import (
    D2,
    HAMMING,
    TRUNCATED_HAMMING,
    CallableMetric,
    DistanceFunction,
    GammaExcess,
    LengthPenaltyMetric,
    T,
    d2,
    d_n,
    excess_gamma,
    gamma_n,
    hamming,
    metric_T,
    truncated_hamming,
)
from .registry import get_metric, list_metrics
from .spheres import (
    SphereCount,
    enumerate_sphere,
    sphere_count_by_enumeration,
    sphere_size,
    sphere_size_fixed_length,
)
from .uniformity import (
    MinimalityReport,
    OppositeStats,
    UniformityReport,
    check_empty_word_bound,
    check_minimality,
    hamming_opposites,
    is_uniform,
    is_weakly_uniform,
    lemma48_opposite,
    lemma48_opposites,
    opposite_satisfaction_stats,
)
from .words import (
    EMPTY,
    Alphabet,
    Word,
    enumerate_language,
    enumerate_words,
    parse_word,
    shortlex_key,
)

__version__ = "0.1.0"
