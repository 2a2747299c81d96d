"""Relaxed vertex colorings: a map f: V -> {0..r-1} is an (r, s)-coloring of K
when no face of K holds more than ``s`` vertices of one color.

The condition is monotone under inclusion, so only facets are ever checked.

Exact search is plain backtracking over a static vertex order with
first-use color numbering (a vertex may open at most one new color) and
per-facet per-color counters.  Iterative deepening over the palette size
makes the first solution found the lexicographically least optimal one.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .asc import SimplicialComplex, VertexTable, bits, mask_of_indices
from .errors import BudgetExhausted, ContextMismatchError, MalformedInputError


@dataclass(frozen=True)
class Coloring:
    """Total map from vertex index to a color id in ``range(palette_size)``."""

    assignment: tuple[int, ...]
    palette_size: int = -1

    def __post_init__(self):
        a = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, "assignment", a)
        size = self.palette_size
        if size < 0:
            size = max(a, default=-1) + 1
            object.__setattr__(self, "palette_size", size)
        if any(c < 0 or c >= size for c in a):
            raise MalformedInputError(f"color ids must lie in 0..{size - 1}")

    @classmethod
    def from_one_based(cls, colors: Sequence[int], palette_size: int | None = None) -> "Coloring":
        if any(int(c) < 1 for c in colors):
            raise MalformedInputError("one-based color ids must be >= 1")
        return cls(tuple(int(c) - 1 for c in colors), -1 if palette_size is None else palette_size)

    def __len__(self):
        return len(self.assignment)

    def one_based(self) -> list[int]:
        return [c + 1 for c in self.assignment]

    def fiber(self, color: int) -> int:
        return mask_of_indices(v for v, c in enumerate(self.assignment) if c == color)

    def fibers(self) -> list[int]:
        out = [0] * self.palette_size
        for v, c in enumerate(self.assignment):
            out[c] |= 1 << v
        return out

    def max_fiber(self) -> int:
        return max((f.bit_count() for f in self.fibers()), default=0)


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for :func:`chromatic_number`.

    ``vertex_order`` is ``"degree"`` (most facets first, ties by index),
    ``"index"``, or an explicit permutation of vertex indices.  ``budget``
    caps search nodes.  ``workers`` > 1 farms prefix subtrees out to a
    process pool; the result never depends on it.
    """

    vertex_order: str | tuple[int, ...] = "degree"
    budget: int | None = None
    workers: int | None = None
    split_depth: int = 3


@dataclass(frozen=True)
class ColorStats:
    """d_f(p): the most vertices of color p found together in one face."""

    d_f: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.d_f.values())


class ChromaticResult(NamedTuple):
    number: int
    witness: Coloring


def _check_length(K: SimplicialComplex, f: Coloring) -> None:
    if len(f) != K.m:
        raise ContextMismatchError(f"coloring has {len(f)} entries but the complex has {K.m} vertices")


def is_coloring(K: SimplicialComplex, f: Coloring, s: int) -> bool:
    if s < 1:
        raise ValueError("s must be >= 1")
    _check_length(K, f)
    fibers = [fb for fb in f.fibers() if fb.bit_count() > s]
    return all((F & fb).bit_count() <= s for F in K.facets for fb in fibers)


def color_stats(K: SimplicialComplex, f: Coloring) -> ColorStats:
    _check_length(K, f)
    fibers = f.fibers()
    return ColorStats({p: max((F & fb).bit_count() for F in K.facets) for p, fb in enumerate(fibers)})


def is_s_to_1(f: Coloring, s: int) -> bool:
    return f.max_fiber() <= s


# -- exact search -------------------------------------------------------------


def search_order(K: SimplicialComplex, policy: str | Sequence[int] = "degree") -> list[int]:
    if not isinstance(policy, str):
        order = [int(v) for v in policy]
        if sorted(order) != list(range(K.m)):
            raise ValueError("explicit vertex order must be a permutation of the vertex indices")
        return order
    if policy == "index":
        return list(range(K.m))
    if policy == "degree":
        deg = [0] * K.m
        for F in K.facets:
            for v in bits(F):
                deg[v] += 1
        return sorted(range(K.m), key=lambda v: (-deg[v], v))
    raise ValueError(f"unknown vertex order policy {policy!r}")


class _Budget(Exception):
    pass


class _Searcher:
    """Backtracking over positions of a fixed vertex order.

    Plain lists and ints only, so instances pickle cheaply for worker pools.
    """

    def __init__(self, facets: Sequence[int], m: int, s: int, r: int, order: Sequence[int]):
        self.m, self.s, self.r = m, s, r
        self.order = list(order)
        facets = sorted(facets)
        self.nf = len(facets)
        # facet ids through the vertex at each position
        self.vfacets = [[i for i, F in enumerate(facets) if F >> v & 1] for v in self.order]
        self.nodes = 0
        self.limit: int | None = None

    def _fresh(self):
        return [0] * (self.nf * self.r), [0] * self.m

    def _apply(self, counts, assign, prefix) -> int | None:
        """Replay a prefix; returns colors used, or None if it violates s."""
        r, s = self.r, self.s
        used = 0
        for pos, c in enumerate(prefix):
            for fid in self.vfacets[pos]:
                counts[fid * r + c] += 1
                if counts[fid * r + c] > s:
                    return None
            assign[pos] = c
            used = max(used, c + 1)
        return used

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """Valid canonical partial assignments of the first ``depth`` positions, lexicographic."""
        out: list[tuple[int, ...]] = []
        counts, assign = self._fresh()
        r, s = self.r, self.s

        def rec(pos, used):
            if pos == depth:
                out.append(tuple(assign[:depth]))
                return
            fl = self.vfacets[pos]
            for c in range(min(used + 1, r)):
                if all(counts[fid * r + c] < s for fid in fl):
                    for fid in fl:
                        counts[fid * r + c] += 1
                    assign[pos] = c
                    rec(pos + 1, max(used, c + 1))
                    for fid in fl:
                        counts[fid * r + c] -= 1

        rec(0, 0)
        return out

    def _tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _Budget

    def find(self, prefix: tuple[int, ...] = ()) -> list[int] | None:
        """First completion of ``prefix`` in lexicographic order, by position."""
        counts, assign = self._fresh()
        used = self._apply(counts, assign, prefix)
        if used is None:
            return None
        r, s, m, vfacets = self.r, self.s, self.m, self.vfacets

        def rec(pos, used):
            if pos == m:
                return True
            self._tick()
            fl = vfacets[pos]
            for c in range(min(used + 1, r)):
                ok = True
                for fid in fl:
                    if counts[fid * r + c] >= s:
                        ok = False
                        break
                if not ok:
                    continue
                for fid in fl:
                    counts[fid * r + c] += 1
                assign[pos] = c
                if rec(pos + 1, used if c < used else c + 1):
                    return True
                for fid in fl:
                    counts[fid * r + c] -= 1
            return False

        return assign if rec(len(prefix), used) else None

    def tally(self) -> list[int]:
        """Number of canonical colorings using exactly k colors, for k = 0..r."""
        counts, assign = self._fresh()
        r, s, m, vfacets = self.r, self.s, self.m, self.vfacets
        by_used = [0] * (r + 1)

        def rec(pos, used):
            if pos == m:
                by_used[used] += 1
                return
            self._tick()
            fl = vfacets[pos]
            for c in range(min(used + 1, r)):
                if all(counts[fid * r + c] < s for fid in fl):
                    for fid in fl:
                        counts[fid * r + c] += 1
                    rec(pos + 1, used if c < used else c + 1)
                    for fid in fl:
                        counts[fid * r + c] -= 1

        rec(0, 0)
        return by_used


def _subtree(args):
    facets, m, s, r, order, prefix, limit = args
    searcher = _Searcher(facets, m, s, r, order)
    searcher.limit = limit
    try:
        found = searcher.find(prefix)
    except _Budget:
        return None, searcher.nodes, True
    return found, searcher.nodes, False


def _greedy_upper(K: SimplicialComplex, s: int, order: Sequence[int]) -> int:
    facets = sorted(K.facets)
    counts: list[dict[int, int]] = [dict() for _ in facets]
    vfacets = {v: [i for i, F in enumerate(facets) if F >> v & 1] for v in order}
    used = 0
    for v in order:
        c = 0
        while any(counts[i].get(c, 0) >= s for i in vfacets[v]):
            c += 1
        for i in vfacets[v]:
            counts[i][c] = counts[i].get(c, 0) + 1
        used = max(used, c + 1)
    return used


def chromatic_bounds(K: SimplicialComplex, s: int) -> tuple[int, int]:
    """ceil(n/s) <= chi_s(K) <= ceil(m/s)."""
    return max(1, -(-K.n // s)), max(1, -(-K.m // s))


def _search_r(K, s, r, order, cfg, spent):
    """Search for an (r, s)-coloring subtree by subtree, in prefix order.

    Returns ``(positional assignment or None, nodes so far, exhausted)``.
    Node accounting is identical for every worker count.
    """
    searcher = _Searcher(K.facets, K.m, s, r, order)
    prefixes = searcher.prefixes(min(cfg.split_depth, K.m))
    nodes = spent + len(prefixes)
    budget = cfg.budget
    if budget is not None and nodes > budget:
        return None, nodes, True
    facets = sorted(K.facets)

    def job(prefix, start):
        return facets, K.m, s, r, order, prefix, None if budget is None else budget - start

    results = None
    workers = cfg.workers or 1
    if workers > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_subtree, [job(p, nodes) for p in prefixes]))
    for i, prefix in enumerate(prefixes):
        found, used, exhausted = results[i] if results is not None else _subtree(job(prefix, nodes))
        nodes += used
        if exhausted or (budget is not None and nodes > budget):
            return None, nodes, True
        if found is not None:
            return found, nodes, False
    return None, nodes, False


def chromatic_number(K: SimplicialComplex, s: int, cfg: SearchConfig | None = None) -> ChromaticResult:
    """Exact s-chromatic number with its canonical witness.

    The witness is the lexicographically least optimal coloring along the
    search order, with colors numbered by first use along that order.
    Raises :class:`BudgetExhausted` (carrying the bounds proven so far)
    when ``cfg.budget`` nodes are not enough.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    cfg = cfg or SearchConfig()
    order = search_order(K, cfg.vertex_order)
    lo, hi = chromatic_bounds(K, s)
    hi = min(hi, _greedy_upper(K, s, order))
    nodes = 0
    for r in range(lo, hi + 1):
        found, nodes, exhausted = _search_r(K, s, r, order, cfg, nodes)
        if exhausted:
            raise BudgetExhausted(f"node budget {cfg.budget} exhausted at r={r}", lower=r, upper=hi, nodes=nodes)
        if found is not None:
            assignment = [0] * K.m
            for pos, v in enumerate(order):
                assignment[v] = found[pos]
            return ChromaticResult(r, Coloring(tuple(assignment), r))
    raise AssertionError("no coloring found at the greedy upper bound")  # pragma: no cover


def is_colorable(K: SimplicialComplex, r: int, s: int, cfg: SearchConfig | None = None) -> Coloring | None:
    """Some (r, s)-coloring of K, or None."""
    cfg = cfg or SearchConfig()
    order = search_order(K, cfg.vertex_order)
    found, nodes, exhausted = _search_r(K, s, r, order, cfg, 0)
    if exhausted:
        raise BudgetExhausted(f"node budget {cfg.budget} exhausted", nodes=nodes)
    if found is None:
        return None
    assignment = [0] * K.m
    for pos, v in enumerate(order):
        assignment[v] = found[pos]
    return Coloring(tuple(assignment), r)


# -- counting -----------------------------------------------------------------


def count_colorings(K: SimplicialComplex, r: int, s: int, surjective: bool = False, budget: int | None = None) -> int:
    """Number of (r, s)-colorings f: V -> {1..r} (labeled palette).

    Enumerates colorings up to renaming colors, then multiplies each class
    using k colors by r!/(r-k)!.
    """
    if r < 1 or s < 1:
        raise ValueError("r and s must be >= 1")
    searcher = _Searcher(K.facets, K.m, s, r, search_order(K))
    searcher.limit = budget
    try:
        by_used = searcher.tally()
    except _Budget:
        raise BudgetExhausted(f"counting exceeded {budget} nodes", nodes=searcher.nodes) from None
    if surjective:
        return by_used[r] * math.factorial(r)
    return sum(n * math.perm(r, k) for k, n in enumerate(by_used))


def _multinomial(total: int, parts: Iterable[int]) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


def _decreasing_vectors(total: int, length: int, cap: int, floor: int = 1):
    """Weakly decreasing vectors of ``length`` entries in [floor, cap] summing to ``total``."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total - floor * (length - 1)), floor - 1, -1):
        if first * length < total:
            break
        for rest in _decreasing_vectors(total - first, length - 1, first, floor):
            yield (first,) + rest


def count_s_to_1_surjections(m: int, r: int, s: int) -> int:
    """Number of maps from an m-set onto an r-set with every fiber of size <= s.

    Sums multinomial(m; m_1..m_r) * multinomial(r; r_1..r_s) over fiber-size
    vectors s >= m_1 >= ... >= m_r >= 1, where r_j counts the fibers of size j.
    """
    if m > r * s or m < r:
        return 0
    total = 0
    for sizes in _decreasing_vectors(m, r, s):
        mult = [sizes.count(j) for j in range(1, s + 1)]
        total += _multinomial(m, sizes) * _multinomial(r, mult)
    return total


# -- (L, s)-colorings ---------------------------------------------------------


def is_L_coloring(K: SimplicialComplex, L: SimplicialComplex, f: Coloring, s: int) -> bool:
    """f is an (s)-coloring of K that maps every facet of K onto a face of L.

    Color id ``p`` denotes the vertex of index ``p`` in L's vertex table.
    """
    if f.palette_size != L.m:
        raise ContextMismatchError(f"palette has {f.palette_size} colors but L has {L.m} vertices")
    if not is_coloring(K, f, s):
        return False
    a = f.assignment
    return all(L.contains_mask(mask_of_indices(a[v] for v in bits(F))) for F in K.facets)


# -- hypergraphs ---------------------------------------------------------------


@dataclass(frozen=True)
class Hypergraph:
    """A uniform hypergraph; every vertex lies on some edge."""

    vertices: VertexTable
    edges: frozenset[int]

    def __post_init__(self):
        sizes = {e.bit_count() for e in self.edges}
        if len(sizes) != 1:
            raise MalformedInputError("hypergraph must be uniform and nonempty")
        if sizes.pop() < 2:
            raise MalformedInputError("hyperedges need at least two vertices")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable]) -> "Hypergraph":
        edges = [[str(x) for x in e] for e in edges]
        order: dict[str, None] = {}
        for e in edges:
            if len(set(e)) != len(e):
                raise MalformedInputError(f"repeated vertex in hyperedge {e}")
            for x in e:
                order.setdefault(x, None)
        table = VertexTable(tuple(order))
        return cls(table, frozenset(table.mask(e) for e in edges))

    @property
    def uniformity(self) -> int:
        return next(iter(self.edges)).bit_count()


def from_hypergraph(H: Hypergraph) -> SimplicialComplex:
    """Pure complex whose facets are the hyperedges."""
    return SimplicialComplex(H.vertices, H.edges)


def has_property_B(H: Hypergraph, cfg: SearchConfig | None = None) -> bool:
    """A red/blue vertex coloring with no monochrome edge exists."""
    s = H.uniformity - 1
    return chromatic_number(from_hypergraph(H), s, cfg).number <= 2
