"""Poset of layers and component groups."""

from torarr.layers.layer import Layer, components_of, full_torus, leq
from torarr.layers.poset import LayerPoset, enumerate_layers
from torarr.layers.isomorphism import is_isomorphic, property_P, split_holds
from torarr.layers.groups import (
    ComponentGroup,
    Projection,
    commuting_iso_exists,
    component_group,
    lg_kernel_table,
    projection,
    projection_kernel,
    transfer_map,
)
from torarr.layers.dot import hasse_dot

__all__ = [
    "Layer",
    "components_of",
    "full_torus",
    "leq",
    "LayerPoset",
    "enumerate_layers",
    "is_isomorphic",
    "property_P",
    "split_holds",
    "ComponentGroup",
    "Projection",
    "component_group",
    "projection",
    "projection_kernel",
    "commuting_iso_exists",
    "lg_kernel_table",
    "transfer_map",
    "hasse_dot",
]
