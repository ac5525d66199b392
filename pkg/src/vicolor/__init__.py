"""vi-simultaneous colorings: exact search, constructive bounds for outerplanar graphs, certificates."""
from __future__ import annotations

from .checker import CheckReport, ViColoring, is_proper, verify
from .exact import chi_vi, chi_vi_via_power, is_colorable
from .graph import Graph, Incidence

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "Graph",
    "Incidence",
    "ViColoring",
    "__version__",
    "chi_vi",
    "chi_vi_via_power",
    "is_colorable",
    "is_proper",
    "verify",
]
