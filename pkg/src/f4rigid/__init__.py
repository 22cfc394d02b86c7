"""Exact group-theoretic computations behind a rigidity argument for F4(p)."""

__version__ = "0.1.0"
