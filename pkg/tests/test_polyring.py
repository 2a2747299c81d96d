from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_faces, complexes, label_facets
from relaxcol import (Monomial, Polynomial, SRContext, VertexTable, c_leq, corpus_entry, elementary_symmetric,
                      equal_in_sr, full_simplex, is_s_to_1_by_identity, normal_form, total_chern)
from relaxcol.errors import ContextMismatchError, ResourceLimitError
from relaxcol.polyring import mul, parse_polynomial

C5 = corpus_entry("C5").complex
P2 = corpus_entry("P2").complex
T4 = VertexTable(("a", "b", "c", "d"))


def var(table, label):
    return Polynomial.variable(table, label)


def dict_poly(table, d):
    return Polynomial.from_monomials(table, {Monomial.from_dict(dict(enumerate(e))): c for e, c in d.items()})


# exponent vectors of length 4 with small entries, independent of the packed encoding
exps = st.tuples(*[st.integers(0, 3)] * 4)
raw_polys = st.dictionaries(exps, st.integers(-5, 5), max_size=6)


def reference_product(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


class TestArithmetic:
    def test_examples(self):
        t = VertexTable(("v",))
        v = var(t, "v")
        assert (1 + v) * (1 - v) == 1 - v * v
        assert v + (-v) == 0
        t2 = VertexTable(("v1", "v2"))
        v1, v2 = var(t2, "v1"), var(t2, "v2")
        assert ((1 + v1) * (1 + v2)).to_text() == "1 + v1 + v2 + v1*v2"

    @given(raw_polys, raw_polys)
    def test_product_matches_reference(self, p, q):
        got = dict_poly(T4, p) * dict_poly(T4, q)
        assert got == dict_poly(T4, reference_product(p, q))

    @given(raw_polys, raw_polys, raw_polys)
    def test_ring_axioms(self, a, b, c):
        a, b, c = (dict_poly(T4, x) for x in (a, b, c))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a - a == 0

    def test_context_mismatch(self):
        other = VertexTable(("x", "y"))
        with pytest.raises(ContextMismatchError):
            var(T4, "a") + var(other, "x")
        with pytest.raises(ContextMismatchError):
            SRContext(C5).normal_form(var(other, "x"))

    def test_term_limit(self):
        t = VertexTable(tuple(f"x{i}" for i in range(12)))
        p = total_chern(t, list(t.labels[:6]))
        q = total_chern(t, list(t.labels[6:]))
        with pytest.raises(ResourceLimitError):
            mul(p, q, limit=100)
        with pytest.raises(ResourceLimitError):
            total_chern(t, limit=1000)

    def test_exponent_overflow(self):
        t = VertexTable(("x",))
        big = var(t, "x") ** 40000
        with pytest.raises(OverflowError):
            big * big

    def test_degree_and_parts(self):
        p = (1 + var(T4, "a")) * (1 + var(T4, "b"))
        assert p.degree() == 2
        assert p.homogeneous_part(1) == var(T4, "a") + var(T4, "b")
        assert Polynomial(T4).degree() == -1


class TestChernClasses:
    def test_c_leq_examples(self):
        t = VertexTable(("a", "b", "c"))
        assert c_leq(t, [], 0) == 1
        assert c_leq(t, ["a", "b"], 1) == 1 + var(t, "a") + var(t, "b")
        a, b, c = (var(t, x) for x in "abc")
        assert c_leq(t, ["a", "b", "c"], 3) == (1 + a) * (1 + b) * (1 + c)

    def test_total_chern_examples(self):
        t = VertexTable(("v",))
        assert total_chern(t) == 1 + var(t, "v")
        t = VertexTable(("a", "b"))
        assert total_chern(t).to_text() == "1 + a + b + a*b"
        c = total_chern(P2.vertices)
        assert len(c) == 64
        assert c.terms()[-1] == (Monomial.squarefree(range(6)), 1)

    @given(st.integers(0, 6), st.integers(0, 7))
    def test_elementary_symmetric_sums_to_total(self, k, s):
        t = VertexTable(tuple(f"x{i}" for i in range(k)))
        e = [elementary_symmetric(t, list(t.labels), i) for i in range(k + 1)]
        assert sum(e[1:], e[0]) == total_chern(t)
        assert sum(e[1:min(s, k) + 1], e[0]) == c_leq(t, list(t.labels), s)
        assert [len(x) for x in e] == [comb(k, i) for i in range(k + 1)]

    @pytest.mark.parametrize("m", range(1, 9))
    def test_partition_products_are_squarefree_zero_one(self, m):
        t = VertexTable(tuple(f"x{i}" for i in range(m)))
        seen = set()
        for blocks in product(range(3), repeat=m):
            key = tuple(blocks)
            if key in seen:
                continue
            seen.add(key)
            for s in (1, 2):
                prod = Polynomial.constant(t, 1)
                for b in range(3):
                    fiber = sum(1 << v for v in range(m) if blocks[v] == b)
                    prod = prod * c_leq(t, fiber, s)
                for mono, coef in prod.terms():
                    assert coef in (0, 1)
                    assert all(e == 1 for _, e in mono.exponents)


class TestNormalForm:
    def test_examples(self):
        ctx = SRContext(C5)
        v = {x: var(C5.vertices, x) for x in C5.vertices.labels}
        assert ctx.normal_form(v["v1"] * v["v3"]) == 0
        p = v["v1"] * v["v1"] * v["v2"]
        assert ctx.normal_form(p) == p
        D = full_simplex(4)
        q = total_chern(D.vertices) ** 2
        assert SRContext(D).normal_form(q) == q

    def test_c5_identity(self):
        ctx = SRContext(C5)
        v = {x: var(C5.vertices, x) for x in C5.vertices.labels}
        rhs = (1 + v["v1"] + v["v3"]) * (1 + v["v2"] + v["v4"]) * (1 + v["v5"])
        assert equal_in_sr(total_chern(C5.vertices), rhs, ctx)
        assert not equal_in_sr(total_chern(C5.vertices), Polynomial.constant(C5.vertices, 1), ctx)
        p = v["v2"] + 3
        assert equal_in_sr(p, p + v["v1"] * v["v3"], ctx)

    @settings(max_examples=40)
    @given(complexes(max_vertices=4), st.data())
    def test_kernel_is_the_non_face_monomials(self, K, data):
        faces = all_faces(label_facets(K))
        ctx = SRContext(K)
        e = data.draw(st.tuples(*[st.integers(0, 2)] * K.m))
        mono = Polynomial.from_monomials(K.vertices, {Monomial.from_dict(dict(enumerate(e))): 1})
        support = frozenset(K.vertices.labels[i] for i, x in enumerate(e) if x)
        assert (normal_form(mono, ctx) == 0) == (support not in faces)

    @settings(max_examples=40)
    @given(complexes(max_vertices=4), st.data())
    def test_multiplicative_linear_idempotent(self, K, data):
        ctx = SRContext(K)
        draw = st.dictionaries(st.tuples(*[st.integers(0, 2)] * K.m), st.integers(-3, 3), max_size=5)
        p = dict_poly(K.vertices, data.draw(draw))
        q = dict_poly(K.vertices, data.draw(draw))
        nf = ctx.normal_form
        assert nf(p * q) == nf(nf(p) * nf(q)) == ctx.mul(p, q)
        assert nf(p + q) == nf(p) + nf(q)
        assert nf(nf(p)) == nf(p)
        assert ctx.total_chern() == nf(total_chern(K.vertices))


class TestText:
    def test_bracketed_labels(self):
        t = VertexTable(("1", "2"))
        p = 2 * var(t, "1") * var(t, "1") - var(t, "2") + 7
        assert p.to_text() == "7 - [2] + 2*[1]^2"
        assert parse_polynomial(p.to_text(), t) == p

    @given(raw_polys)
    def test_round_trip(self, d):
        p = dict_poly(T4, d)
        assert parse_polynomial(p.to_text(), T4) == p


class TestFreeRingIdentity:
    def test_examples(self):
        assert is_s_to_1_by_identity([0, 1, 2, 3], 1)
        assert not is_s_to_1_by_identity([0, 0, 0], 2)
        assert is_s_to_1_by_identity([0, 0, 1, 1, 2, 2], 2)

    @pytest.mark.parametrize("m", range(1, 6))
    def test_agrees_with_fiber_sizes(self, m):
        for f in product(range(3), repeat=m):
            for s in (1, 2, 3):
                assert is_s_to_1_by_identity(f, s) == (max(f.count(p) for p in set(f)) <= s)
