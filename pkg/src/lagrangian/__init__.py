"""Exact verification toolkit for Lagrangian subalgebras of complex semisimple Lie algebras."""

__version__ = "0.1.0"
