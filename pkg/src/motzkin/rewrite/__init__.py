"""Word rewriting with certified traces: macro moves and the normalizer."""

from .engine import Direction, RewriteStep, RewriteTrace
from .macros import (
    FuseResult,
    macro_burrow,
    macro_fuse,
    macro_hop,
    macro_slide,
    macro_t_death,
    macro_wallslide,
)
from .normal import (
    MinimalRun,
    SubsetWeight,
    is_ptp,
    minimal_rtl_run,
    normalize,
    normalize_trace,
    ptp_trace,
    subset_weight,
    to_minimal_rtl,
    to_ptp,
)

__all__ = [
    "Direction", "RewriteStep", "RewriteTrace", "FuseResult",
    "macro_burrow", "macro_fuse", "macro_hop", "macro_slide", "macro_t_death", "macro_wallslide",
    "MinimalRun", "SubsetWeight", "is_ptp", "minimal_rtl_run", "normalize", "normalize_trace",
    "ptp_trace", "subset_weight", "to_minimal_rtl", "to_ptp",
]
