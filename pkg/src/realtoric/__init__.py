"""Rational Betti numbers of real toric manifolds (small covers)."""

from .families import (Graph, graph_associahedron_cover, hessenberg_betti_closed_form, k_n_r,
                       nested_set_complex, permutahedron_cover, secant_numbers, tubes)
from .homology import build_chain_complex, reduced_betti, reduced_betti_in_degree
from .simplicial import SimplicialComplex, all_faces, f_vector, h_vector, induced_subcomplex
from .small_cover import (BettiVector, CharMatrix, SmallCover, ValidationError, betti_numbers,
                          chi_row_sum, euler_characteristic, is_orientable, mod2_betti,
                          moment_angle_euler, support_subcomplex, validate)

__all__ = [
    "BettiVector", "CharMatrix", "Graph", "SimplicialComplex", "SmallCover", "ValidationError",
    "all_faces", "betti_numbers", "build_chain_complex", "chi_row_sum", "euler_characteristic",
    "f_vector", "graph_associahedron_cover", "h_vector", "hessenberg_betti_closed_form",
    "induced_subcomplex", "is_orientable", "k_n_r", "mod2_betti", "moment_angle_euler",
    "nested_set_complex", "permutahedron_cover", "reduced_betti", "reduced_betti_in_degree",
    "secant_numbers", "support_subcomplex", "tubes", "validate",
]
