# paley_zn/__init__.py
"""
paley-zn - Paley-type graphs on Z_n, Dirichlet characters modulo prime
powers, Jacobi sums and exact clique counts.
"""

__version__ = '1.0.0'
