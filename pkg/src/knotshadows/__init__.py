"""Knot shadows: enumeration, skein-polynomial invariants, fertility search.

The package decides which knots a crossing-code shadow can produce, by
exhaustive over/under assignment and exact polynomial identification,
and verifies a suite of inequalities relating crossing numbers, genus,
braid index, self-linking and fertility on the computed data.
"""

from .codes import (
    Shadow,
    ShadowStats,
    canonical_form,
    canonical_word,
    enumerate_shadows,
    is_realizable,
    parse_shadow,
    shadow_from_word,
    shadow_stats,
)
from .diagram import (
    Diagram,
    DiagramStats,
    assign,
    choices_of,
    mirror,
    parse_diagram,
    parse_pd,
    shadow_of,
    simplify,
    stats,
    stats_shadow,
)
from .errors import (
    DuplicateName,
    EmptySet,
    KnotShadowsError,
    LengthMismatch,
    MalformedCode,
    MissingAnnotation,
    NotRealizable,
    ParseError,
    ResourceLimit,
    TableInsufficient,
    ZeroPolynomial,
)
from .fertility import (
    BoundsReport,
    FertilityReport,
    SupportCensus,
    VariationStats,
    analyze_knot,
    fertility_number,
    gc_interval,
    is_fertile,
    is_mn_fertile,
    minimal_diagrams,
    support_census,
    supports,
    variation_stats,
    verify_bounds,
)
from .knotbase import KnotBase, KnotRecord, default_table, identify, load_table
from .polynomial import DegreeBounds, Laurent2, bounds, homfly, invariant_bounds

__version__ = "0.1.0"

__all__ = [
    "Shadow", "ShadowStats", "canonical_form", "canonical_word",
    "enumerate_shadows", "is_realizable", "parse_shadow", "shadow_from_word",
    "shadow_stats",
    "Diagram", "DiagramStats", "assign", "choices_of", "mirror",
    "parse_diagram", "parse_pd", "shadow_of", "simplify", "stats",
    "stats_shadow",
    "KnotShadowsError", "MalformedCode", "NotRealizable", "LengthMismatch",
    "ResourceLimit", "ZeroPolynomial", "ParseError", "DuplicateName",
    "TableInsufficient", "MissingAnnotation", "EmptySet",
    "BoundsReport", "FertilityReport", "SupportCensus", "VariationStats",
    "analyze_knot", "fertility_number", "gc_interval", "is_fertile",
    "is_mn_fertile", "minimal_diagrams", "support_census", "supports",
    "variation_stats", "verify_bounds",
    "KnotBase", "KnotRecord", "default_table", "identify", "load_table",
    "DegreeBounds", "Laurent2", "bounds", "homfly", "invariant_bounds",
]
