"""Faces, face-count polynomials and Hilbert bases of Kostka cones and polytopes."""

from .core import ConePoint, as_partition, conjugate, dominates, embed, kostka_number, partitions
from .counting import (
    BinomialPolynomial,
    check_h_conjecture,
    f_vector,
    fit_face_polynomial,
    h_vector,
)
from .errors import KostkaError, ResourceLimitError, ValidationError
from .euler import alpha, empirical_density, initial_pair_probability
from .faces import (
    FaceVertexSet,
    construct_max_face,
    enumerate_faces,
    face_counts,
    face_dimension,
    is_edge,
    is_face,
    m_closed_form,
    max_face_vertices,
    minimal_face,
)
from .hilbert import (
    classify_initial_pair,
    construct_gcd1,
    construct_gcd2,
    decompose,
    is_hilbert_basis_element,
    scan_initial,
)
from .rays import RayLabel, enumerate_ray_labels, facet_ids, facet_incidence, ray_generator

__all__ = [
    "BinomialPolynomial",
    "ConePoint",
    "FaceVertexSet",
    "KostkaError",
    "RayLabel",
    "ResourceLimitError",
    "ValidationError",
    "alpha",
    "as_partition",
    "check_h_conjecture",
    "classify_initial_pair",
    "conjugate",
    "construct_gcd1",
    "construct_gcd2",
    "construct_max_face",
    "decompose",
    "dominates",
    "embed",
    "empirical_density",
    "enumerate_faces",
    "enumerate_ray_labels",
    "f_vector",
    "face_counts",
    "face_dimension",
    "facet_ids",
    "facet_incidence",
    "fit_face_polynomial",
    "h_vector",
    "initial_pair_probability",
    "is_edge",
    "is_face",
    "is_hilbert_basis_element",
    "kostka_number",
    "m_closed_form",
    "max_face_vertices",
    "minimal_face",
    "partitions",
    "ray_generator",
    "scan_initial",
]
