"""Spectral radii of graphs, their limit points, and the graphs below them."""

from .graphs import (Family, FamilySpec, Graph, MixedGraph, OrientedGraph, ParameterError,
                     SignedGraph, StructuralError, build_family, recognize_shape)
from .spectra import Model, Spectrum, spectral_radius, spectrum

__version__ = "0.1.0"

__all__ = ["Family", "FamilySpec", "Graph", "MixedGraph", "Model", "OrientedGraph",
           "ParameterError", "SignedGraph", "Spectrum", "StructuralError", "build_family",
           "recognize_shape", "spectral_radius", "spectrum"]
