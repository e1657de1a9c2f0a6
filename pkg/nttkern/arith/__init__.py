"""Modular arithmetic kernels: CRT primitives, reductions, butterflies."""
