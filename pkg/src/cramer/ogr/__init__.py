"""The omega-less Cr(2,4,2) as the spinor variety OGr(5,10)."""

from cramer.ogr.entry import entry_chart, entry_charts
from cramer.ogr.identify import (
    CoordMap,
    IdentificationSearch,
    cramer_242_quadrics,
    cross_membership,
    load_coordmap,
    load_search_log,
    replay_search,
    search_identification,
    verify_identification,
    write_coordmap,
)
from cramer.ogr.span import QuadricSpan, quadratic_monomials, quadric_span
from cramer.ogr.spinor import (
    CONVENTIONS,
    SignConvention,
    choose_convention,
    ogr_quadrics,
    parametrization_holds,
    parametrize,
    spinor_quadrics_for,
    spinor_table,
)

__all__ = [
    "CONVENTIONS",
    "CoordMap",
    "IdentificationSearch",
    "QuadricSpan",
    "SignConvention",
    "choose_convention",
    "cramer_242_quadrics",
    "cross_membership",
    "entry_chart",
    "entry_charts",
    "load_coordmap",
    "load_search_log",
    "ogr_quadrics",
    "parametrization_holds",
    "parametrize",
    "quadratic_monomials",
    "quadric_span",
    "replay_search",
    "search_identification",
    "spinor_quadrics_for",
    "spinor_table",
    "verify_identification",
    "write_coordmap",
]
