"""Gelfand-Zetlin polytopes, their Kogan-type faces, and mitosis on them."""

from geomitosis.gz.mitosis import (
    adapted_mitosis_A,
    apply_to_set,
    dual_facets,
    dual_mitosis_C,
    envelope,
    equation_mitosis,
    geometric_equation_mitosis,
    in_dual_facet,
    kogan_mitosis,
)
from geomitosis.gz.tables import (
    A,
    B,
    Closure,
    Diagram,
    Equation,
    EquationFace,
    GZShape,
    Weight,
    all_equations,
    canonical_faces,
    close_and_measure,
    default_flavor,
    diagram_of,
    diagram_to_pipe_dream,
    dual_kogan_vertex,
    dual_subword_face,
    face_from_handle,
    face_handle,
    face_of_diagram,
    flavor_equation,
    gz_polytope,
    gz_to_pd_A,
    gz_to_pd_C,
    inscription,
    is_kogan_face,
    is_reduced_face,
    kogan_vertex,
    pd_to_gz_A,
    pd_to_gz_C,
    pipe_dream_to_diagram,
    point_of,
    vertex_equations,
)
from geomitosis.gz.verify import (
    Report,
    check_dimension_oracle,
    hypothesis_C,
    hypothesis_main,
    kogan_faces,
    reduced_kogan_faces,
    verify_adapted_A,
    verify_theorem_C,
    verify_theorem_main,
)

# short aliases matching the bijection names used elsewhere
pd_bijection_A = pd_to_gz_A
pd_bijection_C = pd_to_gz_C

__all__ = [
    "A",
    "adapted_mitosis_A",
    "all_equations",
    "apply_to_set",
    "B",
    "canonical_faces",
    "check_dimension_oracle",
    "close_and_measure",
    "Closure",
    "default_flavor",
    "Diagram",
    "diagram_of",
    "diagram_to_pipe_dream",
    "dual_facets",
    "dual_kogan_vertex",
    "dual_mitosis_C",
    "dual_subword_face",
    "envelope",
    "Equation",
    "equation_mitosis",
    "EquationFace",
    "face_from_handle",
    "face_handle",
    "face_of_diagram",
    "flavor_equation",
    "geometric_equation_mitosis",
    "gz_polytope",
    "gz_to_pd_A",
    "gz_to_pd_C",
    "GZShape",
    "hypothesis_C",
    "hypothesis_main",
    "in_dual_facet",
    "inscription",
    "is_kogan_face",
    "is_reduced_face",
    "kogan_faces",
    "kogan_mitosis",
    "kogan_vertex",
    "pd_bijection_A",
    "pd_bijection_C",
    "pd_to_gz_A",
    "pd_to_gz_C",
    "pipe_dream_to_diagram",
    "point_of",
    "reduced_kogan_faces",
    "Report",
    "verify_adapted_A",
    "verify_theorem_C",
    "verify_theorem_main",
    "vertex_equations",
    "Weight",
]
