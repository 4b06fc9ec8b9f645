"""Orientable and negative orientable sequences over Z_q."""

__version__ = "0.1.0"
