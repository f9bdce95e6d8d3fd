"""Least signless-Laplacian eigenvalues of small graphs and their extremal families."""

from .graph import (Graph, ThetaShape, add_edge, cycle, graph6_decode, graph6_encode, h_graph, make_graph,
                    remove_edge, theta_graph, theta_star)
from .spectral import full_spectrum, least_q, q_matrix, rayleigh, spectral_radius

__version__ = "0.1.0"
