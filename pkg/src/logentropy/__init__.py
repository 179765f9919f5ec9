"""Differential entropy and entropy variance from statistics of ln X."""

from logentropy.entropy_variance import (
    CrossMoments,
    cross_moments_closed_form_exponential,
    cross_moments_closed_form_uniform,
    hv_after_transform,
    hv_after_transform_logvar_form,
    hv_mc,
    hv_transform_terms,
)
from logentropy.errors import (
    DataError,
    DegenerateVarianceError,
    DomainError,
    InconsistentMomentsError,
    LogEntropyError,
)
from logentropy.estimator import (
    SampleBatch,
    estimate_entropy,
    estimate_entropy_banded,
    estimate_log_moments,
    preprocess,
)
from logentropy.gg import (
    GGParams,
    LogMoments,
    apply_transform,
    gg_entropy,
    gg_K,
    gg_log_moments,
    gg_log_pdf,
    gg_pdf,
    gg_sample,
    gg_special_case,
)
from logentropy.oracle import McEstimate, mc_entropy, mc_hv, mc_K, mc_log_moments
from logentropy.rank import (
    RankedDistribution,
    discrete_info_moments,
    from_probs,
    prefix_split,
    rank_dilation_report,
)
from logentropy.specfun import digamma, ln_gamma, trigamma
from logentropy.transform import (
    DEFAULT_K,
    K_LOGNORMAL,
    InfoMoments,
    TransformParams,
    entropy_after_transform,
    entropy_from_log_moments,
    entropy_shift,
    forward_log_moments,
    recover_transform,
)

__version__ = "0.1.0"
