"""Multiparty quantum mutual information, common information and discord."""

from ._core import (
    DensityMatrix,
    DiscordResult,
    bipartite_discord,
    bipartite_qmi,
    build_state,
    classical_cmi_variants,
    common_information,
    conventional_ix,
    generalized_entropy,
    generalized_oqmi,
    log_negativity,
    multiparty_discord,
    mutual_information,
    operational_qmi,
    partial_trace,
    partial_transpose,
    random_mixed_state,
    random_pure_state,
    relative_entropy,
    shared_two_party,
    theorem2_bounds,
    validate,
    von_neumann_entropy,
    white_noise,
)

__all__ = [
    "DensityMatrix",
    "DiscordResult",
    "bipartite_discord",
    "bipartite_qmi",
    "build_state",
    "classical_cmi_variants",
    "common_information",
    "conventional_ix",
    "generalized_entropy",
    "generalized_oqmi",
    "log_negativity",
    "multiparty_discord",
    "mutual_information",
    "operational_qmi",
    "partial_trace",
    "partial_transpose",
    "random_mixed_state",
    "random_pure_state",
    "relative_entropy",
    "shared_two_party",
    "theorem2_bounds",
    "validate",
    "von_neumann_entropy",
    "white_noise",
]
