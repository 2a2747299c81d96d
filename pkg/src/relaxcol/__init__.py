"""Relaxed vertex colorings of finite simplicial complexes, checked both
combinatorially and through the Stanley–Reisner ring."""

from .asc import SimplicialComplex, VertexTable, join
from .coloring import (Coloring, ColorStats, Hypergraph, SearchConfig, chromatic_number, color_stats,
                       count_colorings, count_s_to_1_surjections, from_hypergraph, has_property_B,
                       is_coloring, is_L_coloring)
from .errors import (BudgetExhausted, ContextMismatchError, InvalidWitnessError, InvariantViolation,
                     MalformedInputError, ResourceLimitError, UnknownVertexError)
from .generators import boundary_simplex, corpus, corpus_entry, cyclic_polytope, full_simplex, random_complex
from .polyring import (Monomial, Polynomial, SRContext, c_leq, elementary_symmetric, equal_in_sr,
                       is_s_to_1_by_identity, normal_form, total_chern)
from .verifier import (Certificate, cross_check, exhaustive_cross_check, factorization_certificate,
                       verify_coloring_algebraically, verify_coloring_s1)

__version__ = "0.1.0"
