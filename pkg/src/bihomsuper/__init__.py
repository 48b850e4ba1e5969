"""Exact verification kernel for finite-dimensional BiHom-Lie superalgebras."""

__version__ = "0.1.0"
