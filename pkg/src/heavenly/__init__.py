"""Functionally invariant, non-invariant solutions of heavenly-type equations:
jets, equation registry, solution classes, conditions, determining systems and metrics."""

__version__ = "0.1.0"
