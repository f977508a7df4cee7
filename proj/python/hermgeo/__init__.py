"""Python bindings for the hermgeo C++ core."""

from ._hermgeo import (
    GeometryError,
    Space,
    classify_point,
    config_gram,
    conformal_factor,
    contains_signature,
    distance,
    geodesic_class,
    geodesic_lift,
    geodesic_through,
    geometrically_equal,
    gram_schmidt,
    klein_distance,
    klein_poincare_map,
    orthogonal_complement,
    poincare_distance,
    poincare_klein_map,
    presets,
    run_cli,
    signature,
    signature_of_gram,
    stereo,
    stereo_inverse,
    subsphere_image,
    tance,
    triangle_report,
    vertices,
    witness_unitary,
)

__all__ = [name for name in dir() if not name.startswith("_")]
