"""Generalized Dellac configurations: grids, statistics, bijections to
Dumont permutations, Dyck-path characterizations, embeddings, tuple models,
and q-polynomial partition functions with boundary conditions."""

from dellac.grid import Config, Params

__all__ = ["Config", "Params"]
__version__ = "0.1.0"
