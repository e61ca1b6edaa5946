"""First resonance varieties: membership, Plücker equations and plane components."""

from torarr.resonance.plucker import (
    Plane,
    PluckerPoint,
    grassmann_pfaffian_ideal,
    plane_from_plucker,
    plucker_variables,
)
from torarr.resonance.varieties import (
    delta_kernel_dim,
    h1_basis,
    h1_coordinates,
    h1_element,
    in_R1,
    linear_ideal_of_subspace,
    wedge_kernel,
)
from torarr.resonance.components import (
    local_planes,
    presentation_factors,
    presentation_resonance,
    resonance_components,
    resonance_lattices,
)

__all__ = [
    "Plane",
    "PluckerPoint",
    "grassmann_pfaffian_ideal",
    "plane_from_plucker",
    "plucker_variables",
    "delta_kernel_dim",
    "h1_basis",
    "h1_coordinates",
    "h1_element",
    "in_R1",
    "linear_ideal_of_subspace",
    "wedge_kernel",
    "local_planes",
    "presentation_factors",
    "presentation_resonance",
    "resonance_components",
    "resonance_lattices",
]
