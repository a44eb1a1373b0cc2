"""Nesting forests of overlap-free, possibly touching simple polygons.

The public surface re-exports the main types and operations; see README.md
for the CLI and the data formats.
"""

from .errors import (
    ContainmentCycle,
    DegenerateAllCollinear,
    DegeneratePolygon,
    DuplicateConsecutiveVertex,
    GenerationFailed,
    InputError,
    InternalOrderViolation,
    NestpolyError,
    OutOfDomain,
    OverlapDetected,
    ParityInconsistency,
    ParseError,
    SemanticError,
    TooFewVertices,
)
from .forest import NestingForest
from .generator import GenConfig, generate, generate_with_stats, transform
from .geometry import (
    Coord,
    Edge,
    Point,
    Polygon,
    XInterval,
    coord,
    make_polygon,
    shoelace_area,
    x_interval,
)
from .instance_io import (
    forest_document,
    parse_instance,
    serialize_forest,
    serialize_instance,
)
from .oracle import (
    PointLocation,
    ValidationReport,
    brute_force_forest,
    interior_point,
    parity_oracle,
    point_in_polygon,
    validate,
    winding_location,
)
from .ordering import Rel, VerticalRel, cmp_at, insertion_cmp, is_below
from .render import render_svg
from .segments import (
    MaxSegment,
    SegmentDecomposition,
    assign_parities,
    count_N,
    decompose,
    satisfies_property_O,
    slope_at,
    y_at,
)
from .sweep import (
    SweepStatus,
    advance_current_edge,
    build_events,
    nesting_forest,
    nesting_forest_with_stats,
    status_predecessor,
)

__version__ = "1.0.0"
