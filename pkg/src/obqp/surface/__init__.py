"""Marked surfaces and their homology lattices."""

from obqp.surface.lattice import (
    BasisEmbedding,
    attach_handle,
    build_surface,
    disk_arc_endpoints,
    disk_curve_class,
    handle_embedding,
    intersection_form,
    pairing,
    picard_lefschetz,
    point_embedding,
    preserves_form,
    remove_last_point,
    subcritical_rank,
    validate_symbol,
)

__all__ = [
    "BasisEmbedding",
    "attach_handle",
    "build_surface",
    "disk_arc_endpoints",
    "disk_curve_class",
    "handle_embedding",
    "intersection_form",
    "pairing",
    "picard_lefschetz",
    "point_embedding",
    "preserves_form",
    "remove_last_point",
    "subcritical_rank",
    "validate_symbol",
]
