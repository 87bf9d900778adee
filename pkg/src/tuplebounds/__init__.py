"""Exact bounds and Monte Carlo checks for dense patterns in tuples of integers.

The library computes, in exact rational arithmetic, the density bounds
surrounding admissible tuples and m-rich congruence families: Mertens
products, covering constructions with their verifiers, congruence-family
upper bounds, local-lemma parameter identities, and the stochastic
statistics used to sanity-check them.
"""

from .arith import (
    GAMMA,
    exp_to_decimal,
    factorize,
    is_prime,
    mertens_product,
    primes_up_to,
    primorial,
    rational_to_json,
    to_decimal,
    totient,
)
from .density import (
    AdmissibleDensityReport,
    McDensityEstimate,
    SummandRatioReport,
    rho_adm_exact,
    rho_adm_mc,
    rho_adm_mod_p_bruteforce,
    rho_adm_mod_p_exact,
    summand_ratio_check,
)
from .errors import (
    ConstructionFailedError,
    DomainError,
    InstanceTooLargeError,
    InsufficientPopulationError,
    RegressionFailure,
    ResourceLimitError,
    TupleBoundsError,
    WindowTooLargeError,
)
from .plausible import (
    CongruenceUpperBound,
    DeltaChainReport,
    LLLParameters,
    PigeonholeWitness,
    TemplateValues,
    counting_power_bound,
    delta_m_chain,
    delta_upper_congruence,
    lll_parameters,
    max_q_for,
    asymptotic_template,
    verify_pigeonhole,
)
from .polignac import (
    ConstructionBundle,
    ConstructionCheck,
    EtaBounds,
    build_construction,
    delta2_lower,
    eta_bounds,
    eta_lower,
    eta_upper,
    pintz_interval_constant,
    verify_construction,
)
from .report import VERSION, BoundReport, envelope
from .stochastic import (
    ChernoffBound,
    CoprimeWindowSampler,
    SurvivalEstimate,
    TranslationClassCount,
    TupleStatistics,
    birthday_prob_exact,
    chernoff_tail_bound,
    lll_survival_experiment,
    sample_f_statistics,
    translation_class_count,
    wilson_halfwidth,
)
from .tuples import (
    IntTuple,
    SampleSpace,
    enumerate_sample_space,
    first_k_admissible,
    is_admissible,
    residue_count,
    residue_profile,
    sample_tuple_from_space,
)

__version__ = VERSION

__all__ = [
    "GAMMA",
    "VERSION",
    "AdmissibleDensityReport",
    "BoundReport",
    "ChernoffBound",
    "CongruenceUpperBound",
    "ConstructionBundle",
    "ConstructionCheck",
    "ConstructionFailedError",
    "CoprimeWindowSampler",
    "DeltaChainReport",
    "DomainError",
    "EtaBounds",
    "InstanceTooLargeError",
    "InsufficientPopulationError",
    "IntTuple",
    "LLLParameters",
    "McDensityEstimate",
    "PigeonholeWitness",
    "RegressionFailure",
    "ResourceLimitError",
    "SampleSpace",
    "SummandRatioReport",
    "SurvivalEstimate",
    "TemplateValues",
    "TranslationClassCount",
    "TupleBoundsError",
    "TupleStatistics",
    "WindowTooLargeError",
    "birthday_prob_exact",
    "build_construction",
    "chernoff_tail_bound",
    "counting_power_bound",
    "delta2_lower",
    "delta_m_chain",
    "delta_upper_congruence",
    "enumerate_sample_space",
    "envelope",
    "eta_bounds",
    "eta_lower",
    "eta_upper",
    "exp_to_decimal",
    "factorize",
    "first_k_admissible",
    "is_admissible",
    "is_prime",
    "lll_parameters",
    "lll_survival_experiment",
    "max_q_for",
    "mertens_product",
    "pintz_interval_constant",
    "primes_up_to",
    "primorial",
    "rational_to_json",
    "residue_count",
    "residue_profile",
    "rho_adm_exact",
    "rho_adm_mc",
    "rho_adm_mod_p_bruteforce",
    "rho_adm_mod_p_exact",
    "sample_f_statistics",
    "sample_tuple_from_space",
    "summand_ratio_check",
    "asymptotic_template",
    "to_decimal",
    "totient",
    "translation_class_count",
    "verify_construction",
    "verify_pigeonhole",
    "wilson_halfwidth",
]
