"""Schubert varieties in E-type flag varieties and their free resolutions.

Exact computations on T-shaped Dynkin diagrams: Weyl orbits and Bruhat order,
Lie algebra gradings, graded resolution formats, Schur functor dimensions and
the quartic invariant on the third exterior power of k^6.
"""

from __future__ import annotations

from .diagram import PRESETS, TDiagram, build_diagram, classify, parse_diagram
from .orbit import OrbitPoset, bruhat_leq, complement_filter, orbit_poset, sigma_chain
from .resolution import GradedFormat, IntPoly, hilbert_numerator, linkage_dual

__version__ = "0.1.0"

__all__ = [
    "PRESETS",
    "GradedFormat",
    "IntPoly",
    "OrbitPoset",
    "TDiagram",
    "bruhat_leq",
    "build_diagram",
    "classify",
    "complement_filter",
    "hilbert_numerator",
    "linkage_dual",
    "orbit_poset",
    "parse_diagram",
    "sigma_chain",
]
