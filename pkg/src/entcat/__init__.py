"""Exact decision procedures for majorization, catalysis and multiple-copy conversions."""

from .catalysis import (
    catalyst_useful,
    construct_catalyst,
    decompose,
    flatten_target,
    grid_catalyst_search,
    in_kd,
    k_useful,
    kd_nonempty,
    kd_witness,
    min_useful_k,
    mlocc_witness_check,
    necessary_segment,
    power_condition,
    sufficient_condition,
    targets_for_catalyst,
)
from .certificates import Inequality, NotUseful, UsefulnessCertificate
from .errors import *  # noqa: F401,F403
from .majorization import (
    PmaxResult,
    majorizes,
    pmax,
    strictly_majorized,
    strictly_super_majorized,
    super_majorized,
    tie_indices,
)
from .probabilistic import (
    ProbThreshold,
    construct_prob_catalyst,
    in_K_lambda,
    in_M_lambda_k,
    in_S_lambda,
    in_T_lambda,
    kd_lambda_witness,
    prob_catalyst_useful,
    prob_inf_useful,
    prob_k_useful,
    prob_min_useful_k,
)
from .vectors import (
    E_sum,
    ProbVector,
    Segment,
    bottom_sum,
    canonicalize,
    direct_power,
    direct_sum,
    e_sum,
    global_uniformity,
    local_uniformity,
    normalize,
    parse_vector,
    read_vector,
    tensor,
    tensor_power,
    top_sum,
    uniform,
    vector,
)

__version__ = "0.1.0"
