"""Bennequin surfaces built from words in Bennequin form."""

from obqp.bennequin.surface import (
    band_graph,
    bennequin_bound_check,
    bennequin_report,
    boundary_and_genus,
    build_bennequin,
    euler_characteristic,
    page_angles,
    self_linking_sqp,
    singularity_counts,
)

__all__ = [
    "band_graph",
    "bennequin_bound_check",
    "bennequin_report",
    "boundary_and_genus",
    "build_bennequin",
    "euler_characteristic",
    "page_angles",
    "self_linking_sqp",
    "singularity_counts",
]
