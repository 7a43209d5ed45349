"""Charts of the variety, transition Jacobians and the canonical class."""

from cramer.charts.chart import ChartAtlas, ChartMap, SolvedCoordinate, chart_solve
from cramer.charts.transition import (
    block_shape_holds,
    cartier_cover_report,
    is_adjacent,
    sigma_consistency,
    sigma_ratio,
    transition_jacobian,
    transition_jacobian_det,
)

__all__ = [
    "ChartAtlas",
    "ChartMap",
    "SolvedCoordinate",
    "block_shape_holds",
    "cartier_cover_report",
    "chart_solve",
    "is_adjacent",
    "sigma_consistency",
    "sigma_ratio",
    "transition_jacobian",
    "transition_jacobian_det",
]
