"""Divisible subdivisions in Z_q-edge-weighted complete graphs."""

__version__ = "0.1.0"
FORMAT_VERSION = 1
