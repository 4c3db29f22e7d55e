"""Degree-one mod-p cohomology, Sylow residuals and p-length invariants of
finite permutation groups."""

__version__ = "0.1.0"
