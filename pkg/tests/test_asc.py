from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_faces, complexes, f_vector, flagification, label_facets, missing_faces
from relaxcol import SimplicialComplex, boundary_simplex, corpus_entry, full_simplex, join
from relaxcol.asc import maximal_sets
from relaxcol.coloring import chromatic_number
from relaxcol.errors import EmptyComplexError, MalformedInputError, UnknownVertexError

C5 = corpus_entry("C5").complex
P2 = corpus_entry("P2").complex
T2 = corpus_entry("T2").complex


def label_sets(K):
    return set(label_facets(K))


class TestConstruction:
    def test_duplicates_and_dominated_facets_collapse(self):
        K = SimplicialComplex.from_facets([["a", "b"], ["b", "c"], ["a", "b"]])
        assert label_sets(K) == {frozenset("ab"), frozenset("bc")}
        assert label_sets(SimplicialComplex.from_facets([["a"], ["a", "b"]])) == {frozenset("ab")}

    def test_repeated_label_in_one_facet(self):
        with pytest.raises(MalformedInputError):
            SimplicialComplex.from_facets([["a", "a", "b"]])

    def test_no_facets(self):
        with pytest.raises(EmptyComplexError):
            SimplicialComplex.from_facets([])

    def test_ghost_vertex_rejected(self):
        with pytest.raises(MalformedInputError):
            SimplicialComplex.from_facets([["a", "b"]], vertices=["a", "b", "c"])

    def test_empty_complex(self):
        E = SimplicialComplex.empty()
        assert E.m == 0 and E.f_vector() == (1,) and E.dim == -1
        assert E.contains([])

    def test_vertex_order_is_insertion_order(self):
        K = SimplicialComplex.from_facets([["z", "y"], ["x"]])
        assert K.vertices.labels == ("z", "y", "x")
        assert [K.vertices.lookup(x) for x in "zyx"] == [0, 1, 2]


class TestFaces:
    def test_membership(self):
        assert C5.contains([]) and P2.contains([])
        assert not C5.contains(["v1", "v3"])
        assert C5.contains(["v1", "v2"])

    def test_unknown_label(self):
        with pytest.raises(UnknownVertexError):
            C5.contains(["v9"])

    def test_f_vectors(self):
        assert T2.f_vector() == (1, 7, 21, 14)
        assert P2.f_vector() == (1, 6, 15, 10)
        assert full_simplex(3).f_vector() == (1, 3, 3, 1)
        assert (P2.n, P2.m, P2.codim) == (3, 6, 3)

    def test_euler_characteristic(self):
        assert T2.euler_characteristic() == 7 - 21 + 14 == 0
        assert P2.euler_characteristic() == 6 - 15 + 10 == 1
        tetra = boundary_simplex(4)
        assert tetra.euler_characteristic() == 2 and tetra.is_pure() and tetra.is_pseudomanifold()

    @given(complexes())
    def test_faces_and_f_vector_match_brute_force(self, K):
        faces = all_faces(label_facets(K))
        assert {frozenset(K.vertices.names(x)) for x in K.faces()} == faces
        assert K.f_vector() == f_vector(label_facets(K))


class TestSkeleton:
    def test_examples(self):
        assert P2.skeleton(P2.dim) == P2
        K4 = full_simplex(4).skeleton(1)
        assert len(K4.facets) == 6 and K4.dim == 1
        assert P2.skeleton(1).f_vector() == (1, 6, 15)
        assert P2.skeleton(-1) == SimplicialComplex.empty()

    @given(complexes(), st.integers(-1, 5))
    def test_idempotent(self, K, j):
        S = K.skeleton(j)
        assert S.skeleton(j) == S

    @given(complexes(), st.integers(0, 5))
    def test_faces_are_the_small_faces(self, K, j):
        if j < K.dim:
            expected = {x for x in all_faces(label_facets(K)) if len(x) <= j + 1}
            got = {frozenset(K.vertices.names(x)) for x in K.skeleton(j).faces()}
            assert got == expected


class TestMissingFaces:
    def test_p2_triples(self):
        triples = ["123", "125", "136", "145", "146", "234", "246", "256", "345", "356"]
        got = {frozenset(P2.vertices.names(x)) for x in P2.missing_faces()}
        assert got == {frozenset(f"v{c}" for c in t) for t in triples}

    def test_simplex_and_boundary(self):
        assert full_simplex(5).missing_faces() == []
        assert boundary_simplex(5).missing_faces() == [0b11111]

    def test_increasing_size(self):
        sizes = [x.bit_count() for x in C5.missing_faces()]
        assert sizes == sorted(sizes)

    @given(complexes(max_vertices=8))
    def test_matches_brute_force(self, K):
        got = {frozenset(K.vertices.names(x)) for x in K.missing_faces()}
        assert got == missing_faces(label_facets(K), K.vertices.labels)

    @settings(max_examples=25)
    @given(complexes(min_vertices=9, max_vertices=12))
    def test_regenerate_complex(self, K):
        missing = K.missing_faces()
        full = (1 << K.m) - 1
        for sigma in range(full + 1):
            blocked = any(mf & sigma == mf for mf in missing)
            assert K.contains_mask(sigma) == (not blocked)


class TestFlag:
    def test_examples(self):
        assert C5.flagification(1) == C5 and C5.is_s_flag(1)
        assert P2.flagification(2) == P2
        assert P2.is_s_flag(2) and not P2.is_s_flag(1)

    @pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
    def test_boundary_of_simplex(self, N):
        K = boundary_simplex(N + 1)
        assert K.is_s_flag(N) and not K.is_s_flag(N - 1)

    @pytest.mark.parametrize("m,j", [(m, j) for m in range(2, 8) for j in range(1, m - 1)])
    def test_skeleta_of_simplex(self, m, j):
        S = full_simplex(m).skeleton(j)
        assert S.flagification(j) == full_simplex(m)
        assert S.is_s_flag(j + 1)
        if j >= 1:
            assert not S.is_s_flag(j)

    @given(complexes(), st.integers(1, 4))
    def test_keeps_s_skeleton(self, K, s):
        F = K.flagification(s)
        assert F.skeleton(s) == K.skeleton(s)
        assert K.faces() <= F.faces()
        assert F.is_s_flag(s)

    @settings(max_examples=30)
    @given(complexes(max_vertices=10), st.integers(1, 3))
    def test_matches_brute_force(self, K, s):
        expected = flagification(label_facets(K), K.vertices.labels, s)
        assert label_sets(K.flagification(s)) == expected

    def test_brute_force_at_fourteen_vertices(self):
        from relaxcol.generators import random_complex
        for seed in range(3):
            K = random_complex(14, 0.35, seed, candidates=10)
            for s in (1, 2):
                expected = flagification(label_facets(K), K.vertices.labels, s)
                assert label_sets(K.flagification(s)) == expected

    @given(st.integers(1, 8), st.sets(st.integers(1, 255)))
    def test_maximal_sets_are_maximal_and_avoid_forbidden(self, m, forbidden):
        forbidden = [f & ((1 << m) - 1) for f in forbidden if f & ((1 << m) - 1)]
        found = maximal_sets(m, forbidden)
        ok = [x for x in range(1 << m) if not any(f & x == f for f in forbidden)]
        assert set(found) == {x for x in ok if not any(x != y and x & y == x for y in ok)}


class TestJoin:
    def test_disc(self):
        D = join(full_simplex(1), boundary_simplex(3))
        assert D.m == 4 and D.f_vector() == (1, 4, 6, 3)
        assert chromatic_number(D, 1).number == 4

    def test_with_empty_complex(self):
        J = join(C5, SimplicialComplex.empty())
        assert J == C5

    def test_three_sphere(self):
        S = join(boundary_simplex(4), boundary_simplex(2))
        assert S.m == 6 and S.is_pseudomanifold() and S.euler_characteristic() == 0

    @settings(max_examples=30)
    @given(complexes(max_vertices=5), complexes(max_vertices=5))
    def test_f_vector_is_convolution(self, K, L):
        a, b = K.f_vector(), L.f_vector()
        conv = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                conv[i + j] += x * y
        assert join(K, L).f_vector() == tuple(conv)

    @settings(max_examples=20)
    @given(complexes(max_vertices=3), complexes(max_vertices=3), complexes(max_vertices=3))
    def test_associative_up_to_labels(self, A, B, C):
        left = join(join(A, B), C)
        right = join(A, join(B, C))
        assert left.f_vector() == right.f_vector()
        assert len(left.facets) == len(right.facets)
