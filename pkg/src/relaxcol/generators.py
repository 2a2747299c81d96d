"""Standard complexes: simplices and their boundaries, cyclic polytopes, a
small named corpus, and seeded random complexes for property tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .asc import SimplicialComplex, VertexTable, mask_of_indices
from .coloring import chromatic_number
from .errors import RelaxColError


class CorpusValidationError(RelaxColError):
    exit_code = 4


def _labels(m: int, start: int = 1) -> tuple[str, ...]:
    return tuple(str(i) for i in range(start, start + m))


def full_simplex(m: int, start: int = 1) -> SimplicialComplex:
    """D[V] on vertices ``start .. start+m-1``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return SimplicialComplex(VertexTable(_labels(m, start)), frozenset({(1 << m) - 1}))


def boundary_simplex(m: int, start: int = 1) -> SimplicialComplex:
    """∂D[V]: every proper subset of an m-set (needs m >= 2)."""
    if m < 2:
        raise ValueError("the boundary of a simplex needs m >= 2 (m = 1 gives {∅})")
    full = (1 << m) - 1
    return SimplicialComplex(VertexTable(_labels(m, start)), frozenset(full & ~(1 << i) for i in range(m)))


def gale_evenness(sigma: frozenset[int] | set[int], m: int) -> bool:
    """Between any two non-members of ``1..m``, ``sigma`` has an even number of elements."""
    outside = [v for v in range(1, m + 1) if v not in sigma]
    for i, a in enumerate(outside):
        for b in outside[i + 1:]:
            if sum(1 for x in sigma if a < x < b) % 2:
                return False
    return True


def _gale_by_runs(sigma: tuple[int, ...], m: int) -> bool:
    # maximal runs of consecutive members must be even unless they touch 1 or m
    runs: list[list[int]] = []
    for x in sigma:
        if runs and runs[-1][-1] == x - 1:
            runs[-1].append(x)
        else:
            runs.append([x])
    return all(len(run) % 2 == 0 for run in runs if run[0] != 1 and run[-1] != m)


def cyclic_polytope(m: int, n: int) -> SimplicialComplex:
    """Boundary complex CP(m, n) of the cyclic n-polytope on vertices 1..m."""
    if not (m > n >= 2):
        raise ValueError("cyclic polytope needs m > n >= 2")
    facets = []
    for sigma in combinations(range(1, m + 1), n):
        literal = gale_evenness(frozenset(sigma), m)
        if literal != _gale_by_runs(sigma, m):
            raise AssertionError(f"evenness tests disagree on {sigma}")
        if literal:
            facets.append(mask_of_indices(v - 1 for v in sigma))
    return SimplicialComplex(VertexTable(_labels(m)), frozenset(facets))


def random_complex(m: int, density: float, seed: int, candidates: int | None = None) -> SimplicialComplex:
    """Seeded random complex on vertices 1..m.

    Draws ``candidates`` (default m) random vertex sets, each vertex kept with
    probability ``density``, then gives every uncovered vertex a singleton facet.
    """
    if m < 1 or not (0 < density <= 1):
        raise ValueError("need m >= 1 and 0 < density <= 1")
    rng = random.Random(seed)
    facets = set()
    for _ in range(candidates or m):
        mask = 0
        for v in range(m):
            if rng.random() < density:
                mask |= 1 << v
        if mask:
            facets.add(mask)
    covered = 0
    for f in facets:
        covered |= f
    for v in range(m):
        if not covered >> v & 1:
            facets.add(1 << v)
    return SimplicialComplex(VertexTable(_labels(m)), frozenset(facets))


def random_sample(count: int, max_vertices: int, seed: int, min_vertices: int = 2) -> list[SimplicialComplex]:
    """``count`` seeded random complexes with vertex counts in [min_vertices, max_vertices]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(min_vertices, max_vertices)
        out.append(random_complex(m, rng.uniform(0.25, 0.75), rng.randrange(1 << 30)))
    return out


# -- named corpus ---------------------------------------------------------------

P2_MISSING = ("123", "125", "136", "145", "146", "234", "246", "256", "345", "356")


def _c5() -> SimplicialComplex:
    return SimplicialComplex.from_facets([[f"v{i}", f"v{i % 5 + 1}"] for i in range(1, 6)],
                                         vertices=[f"v{i}" for i in range(1, 6)])


def _mb5() -> SimplicialComplex:
    # read off the strip picture: bottom row 1 2 3 4, top row 4 5 1, ends glued with a twist
    return SimplicialComplex.from_facets(["124", "245", "235", "135", "134"], vertices="12345")


def _p2() -> SimplicialComplex:
    missing = {frozenset(t) for t in P2_MISSING}
    facets = [t for t in combinations("123456", 3) if frozenset(t) not in missing]
    return SimplicialComplex.from_facets([[f"v{x}" for x in t] for t in facets],
                                         vertices=[f"v{i}" for i in range(1, 7)])


def _t2() -> SimplicialComplex:
    facets = []
    for i in range(7):
        facets.append([i, (i + 1) % 7, (i + 3) % 7])
        facets.append([i, (i + 2) % 7, (i + 3) % 7])
    return SimplicialComplex.from_facets([[str(v + 1) for v in f] for f in facets], vertices=_labels(7))


def _disc4() -> SimplicialComplex:
    # cone with apex 1 over the triangle boundary on 2, 3, 4
    return SimplicialComplex.from_facets(["124", "134", "123"], vertices="1234")


@dataclass(frozen=True)
class CorpusEntry:
    """A named complex with facts that are re-verified whenever the corpus loads.

    ``chi`` maps s to the s-chromatic number.  ``source`` says whether the
    facts come from the literature or were derived here.
    """

    name: str
    complex: SimplicialComplex
    f_vector: tuple[int, ...]
    chi: dict[int, int] = field(default_factory=dict)
    source: str = "literature"
    description: str = ""


def _validate(entry: CorpusEntry) -> None:
    K = entry.complex
    problems = []
    if K.f_vector() != entry.f_vector:
        problems.append(f"f-vector {K.f_vector()} != {entry.f_vector}")
    for s, expected in entry.chi.items():
        got = chromatic_number(K, s).number
        if got != expected:
            problems.append(f"chi_{s} = {got}, expected {expected}")
    if entry.name in ("MB5", "T2"):
        edges = K.skeleton(1)
        if len(edges.facets) != K.m * (K.m - 1) // 2:
            problems.append("1-skeleton is not complete")
    if entry.name == "T2" and not (K.is_pseudomanifold() and K.euler_characteristic() == 0):
        problems.append("not a closed surface of Euler characteristic 0")
    if entry.name == "P2":
        expected_missing = sorted(K.vertices.mask(f"v{x}" for x in t) for t in P2_MISSING)
        if sorted(K.missing_faces()) != expected_missing:
            problems.append("missing faces differ from the listed triples")
    if problems:
        raise CorpusValidationError(f"corpus entry {entry.name}: " + "; ".join(problems))


@lru_cache(maxsize=1)
def _corpus() -> tuple[CorpusEntry, ...]:
    entries = (
        CorpusEntry("C5", _c5(), (1, 5, 5), {1: 3, 2: 1}, description="5-cycle"),
        CorpusEntry("MB5", _mb5(), (1, 5, 10, 5), {1: 5, 2: 2}, source="derived",
                    description="5-vertex Möbius band"),
        CorpusEntry("P2", _p2(), (1, 6, 15, 10), {1: 6, 2: 3}, description="6-vertex real projective plane"),
        CorpusEntry("T2", _t2(), (1, 7, 21, 14), {1: 7, 2: 3}, source="derived",
                    description="7-vertex torus"),
        CorpusEntry("DISC4", _disc4(), (1, 4, 6, 3), {1: 4, 2: 2}, description="cone over a triangle boundary"),
    )
    for e in entries:
        _validate(e)
    return entries


def corpus() -> list[CorpusEntry]:
    return list(_corpus())


def corpus_entry(name: str) -> CorpusEntry:
    for e in _corpus():
        if e.name.lower() == name.lower():
            return e
    raise KeyError(f"no corpus entry {name!r}; known: {', '.join(e.name for e in _corpus())}")
