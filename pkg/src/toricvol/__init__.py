"""Normalized volumes of toric singularities through Santaló points."""
__version__ = "0.1.0"
