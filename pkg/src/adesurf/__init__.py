"""Exact verification toolkit for projective surfaces in P^3 carrying many
ADE quotient singularities: number fields, Groebner bases, local singularity
classification, reflection-group orbits, and end-to-end census pipelines."""

__version__ = "0.1.0"
