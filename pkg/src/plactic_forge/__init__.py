"""Schubert calculus, plactic-type algebras and Cauchy kernels, computed exactly."""

__version__ = "0.1.0"
