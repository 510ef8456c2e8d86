"""Hopf monoids in vector species with exact arithmetic."""
__version__ = "0.1.0"
