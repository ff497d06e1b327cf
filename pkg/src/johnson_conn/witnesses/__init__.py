"""Explicit cuts and path families, each checkable against a built graph.

``lemma7_*`` and ``lemma8_*`` names are aliases of the neighbour-class and
entry-layer constructions.
"""
from .class_paths import (
    Lemma7Config,
    NeighbourClassConfig,
    lemma7_paths,
    neighbour_class_config,
    neighbour_class_paths,
)
from .cuts import EdgeNeighborhoodCut, cut_edge_neighborhood, cut_jn2, johnson_neighbours
from .entry_paths import (
    CASES,
    EntryLayerConfig,
    Lemma8Config,
    check_config,
    entry_layer_paths,
    enumerate_entry_layer_cases,
    enumerate_lemma8_cases,
    lemma8_paths,
    make_entry_layer_config,
    make_lemma8_config,
)
from .paths import PathCheck, PathFamily, collapse, verify_path_family

__all__ = [
    "CASES",
    "EdgeNeighborhoodCut",
    "EntryLayerConfig",
    "Lemma7Config",
    "Lemma8Config",
    "NeighbourClassConfig",
    "PathCheck",
    "PathFamily",
    "check_config",
    "collapse",
    "cut_edge_neighborhood",
    "cut_jn2",
    "entry_layer_paths",
    "enumerate_entry_layer_cases",
    "enumerate_lemma8_cases",
    "johnson_neighbours",
    "lemma7_paths",
    "lemma8_paths",
    "make_entry_layer_config",
    "make_lemma8_config",
    "neighbour_class_config",
    "neighbour_class_paths",
    "verify_path_family",
]
