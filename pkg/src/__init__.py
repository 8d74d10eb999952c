"""Genetic fuzzy regressors for the airfoil self-noise dataset."""

__version__ = "1.0.0"
