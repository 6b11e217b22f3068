"""Exact computer algebra for zigzag algebras, affinized symmetric algebras,
semicuspidal word combinatorics and KLR straightening."""

__version__ = "0.1.0"
