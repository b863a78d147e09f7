"""Wide-angle panorama projections built on a Mobius shrink of the viewing sphere."""

from .distortion import DistortionReport, cap_grid, milnor_distortion
from .errors import (
    BehindCameraError,
    DomainError,
    GeometryError,
    IdentityMapError,
    NonPositiveScaleError,
    NotRepresentableError,
    OutOfImageError,
    PoleProjectionError,
)
from .mobius import (
    INFINITY,
    ComplexPoint,
    MobiusClass,
    MobiusTransform,
    hyperbolic_scaling,
    sphere_conjugate,
)
from .projections import (
    KINDS,
    ProjectionSpec,
    mobius_forward,
    mobius_inverse,
    project,
    shrink_factor,
    spec_from_mapping,
    spec_to_mapping,
    unproject,
    unproject_masked,
)
from .render import (
    EquirectImage,
    RenderRequest,
    export_test_vectors,
    format_vector_records,
    parse_vector_records,
    render,
    sample,
    write_png,
)
from .sphere import (
    ViewState,
    from_spherical,
    inverse_stereographic,
    perspective_project,
    perspective_unproject,
    rotate_view,
    rotate_view_inverse,
    stereographic,
    to_spherical,
    unit_vector,
)

__version__ = "0.1.0"

__all__ = [
    "BehindCameraError",
    "ComplexPoint",
    "DistortionReport",
    "DomainError",
    "EquirectImage",
    "GeometryError",
    "IdentityMapError",
    "INFINITY",
    "KINDS",
    "MobiusClass",
    "MobiusTransform",
    "NonPositiveScaleError",
    "NotRepresentableError",
    "OutOfImageError",
    "PoleProjectionError",
    "ProjectionSpec",
    "RenderRequest",
    "ViewState",
    "cap_grid",
    "export_test_vectors",
    "format_vector_records",
    "from_spherical",
    "hyperbolic_scaling",
    "inverse_stereographic",
    "milnor_distortion",
    "mobius_forward",
    "mobius_inverse",
    "parse_vector_records",
    "perspective_project",
    "perspective_unproject",
    "project",
    "render",
    "rotate_view",
    "rotate_view_inverse",
    "sample",
    "shrink_factor",
    "spec_from_mapping",
    "spec_to_mapping",
    "sphere_conjugate",
    "stereographic",
    "to_spherical",
    "unit_vector",
    "unproject",
    "unproject_masked",
    "write_png",
]
