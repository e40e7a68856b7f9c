"""Zigzag persistence for temporal networks and ordinal partition networks."""

__version__ = "0.1.0"
