"""Locally repairable code toolkit: RS+XOR construction, distance bounds,
exhaustive verifiers, flow-graph capacity checks, and a simulated store."""

__version__ = "0.1.0"

from ._core import (
    CodeParams,
    CorruptBlockError,
    DecodeError,
    Field,
    FlowNet,
    InsufficientSymbolsError,
    LrcCode,
    Manifest,
    NodeContent,
    RepairError,
    RepairReport,
    RsCode,
    SchemeStats,
    ComparisonReport,
    Slot,
    build_flownet,
    certify,
    check_ceiling_identities,
    compare_schemes,
    distance_bound,
    effective_rate,
    exact_distance,
    exact_locality,
    fail_and_repair,
    multicast_capacity,
    min_cut_all_dcs,
    retrieve,
    rlnc_verify,
    scalar_bound,
    store,
)

__all__ = [
    "CodeParams",
    "ComparisonReport",
    "CorruptBlockError",
    "DecodeError",
    "Field",
    "FlowNet",
    "InsufficientSymbolsError",
    "LrcCode",
    "Manifest",
    "NodeContent",
    "RepairError",
    "RepairReport",
    "RsCode",
    "SchemeStats",
    "Slot",
    "build_flownet",
    "certify",
    "check_ceiling_identities",
    "compare_schemes",
    "distance_bound",
    "effective_rate",
    "exact_distance",
    "exact_locality",
    "fail_and_repair",
    "multicast_capacity",
    "min_cut_all_dcs",
    "retrieve",
    "rlnc_verify",
    "scalar_bound",
    "store",
]
