"""
torarr - exact invariants of central toric arrangements.

Integer matrices in, arithmetic matroids, posets of layers, cohomology
presentations and first resonance varieties out.
"""

__version__ = "0.3.0"
