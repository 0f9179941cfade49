"""Exact centralizer strata and component groups in PGL_n over cyclotomic fields."""

from ._core import (
    Cyclotomic,
    Matrix,
    GeneratorSet,
    Stratum,
    ComponentGroupReport,
    solve_stratum,
    centralizer,
    component_group,
    build_family,
    stabilize,
    classify_label,
    problem_to_generators,
    paper_suite,
    __version__,
)

__all__ = [
    "Cyclotomic",
    "Matrix",
    "GeneratorSet",
    "Stratum",
    "ComponentGroupReport",
    "solve_stratum",
    "centralizer",
    "component_group",
    "build_family",
    "stabilize",
    "classify_label",
    "problem_to_generators",
    "paper_suite",
    "__version__",
]
