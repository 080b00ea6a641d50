"""
A (very) small library for spectral graph invariants.

It computes the normalized Laplacian Estrada index and its relatives,
checks them against their known bounds, and gives the exact spectrum
of the treelike fractals G_n(m) by spectral decimation.

"""

__version__ = "1.0.0"

from . import graph
from . import spectral
from . import fractal
