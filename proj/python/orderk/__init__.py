"""Order-k Voronoi diagrams, local coordinates and natural-neighbour interpolation."""

from ._core import (
    BBox,
    CellIdentityReport,
    IdentityTerm,
    InterpolationResult,
    OrderKCell,
    OrderKDiagram,
    OrderkError,
    PointSet,
    Region,
    Vec2,
    WeightVector,
    aurenhammer_identity,
    barycentric_triangle,
    build_diagram,
    g1,
    g2,
    g2_raw,
    g3,
    g3_raw,
    generalized_weights,
    interpolate_multi,
    interpolate,
    lemma1_check,
    make_bbox,
    property_line,
    quad_identity,
    random_sites,
    region,
    region_nesting_check,
    render_svg,
    sibson_weights,
    verify,
    vertices_1d,
)

__all__ = [
    "BBox",
    "CellIdentityReport",
    "IdentityTerm",
    "InterpolationResult",
    "OrderKCell",
    "OrderKDiagram",
    "OrderkError",
    "PointSet",
    "Region",
    "Vec2",
    "WeightVector",
    "aurenhammer_identity",
    "barycentric_triangle",
    "build_diagram",
    "g1",
    "g2",
    "g2_raw",
    "g3",
    "g3_raw",
    "generalized_weights",
    "interpolate_multi",
    "interpolate",
    "lemma1_check",
    "make_bbox",
    "property_line",
    "quad_identity",
    "random_sites",
    "region",
    "region_nesting_check",
    "render_svg",
    "sibson_weights",
    "verify",
    "vertices_1d",
]
