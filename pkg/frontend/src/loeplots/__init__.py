"""Figure rendering for operator Page-curve CSV data.

This package performs no entropy computation beyond nats/bits unit
conversion: every physics number comes in through the CSV contract of the
producing library's command-line tools.
"""
from .schema import CSV_HEADER, Curve, CurvePoint, SchemaError, load_curve
from .render import FigureSpec, render_page_curve

__all__ = [
    "CSV_HEADER",
    "Curve",
    "CurvePoint",
    "SchemaError",
    "load_curve",
    "FigureSpec",
    "render_page_curve",
]
__version__ = "0.1.0"
