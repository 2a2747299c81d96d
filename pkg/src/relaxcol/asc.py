"""Finite abstract simplicial complexes stored by their facets.

Vertices are interned into a :class:`VertexTable`; every vertex set is a
Python ``int`` used as a bit-set over the table's indices.  Faces are never
materialised unless an operation needs them (f-vector, skeleta, missing
faces); membership is a subset-of-some-facet test.

The complex ``{∅}`` (no vertices, one empty facet) is a valid complex.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import EmptyComplexError, MalformedInputError, UnknownVertexError


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key for vertex sets: by size, then lexicographically by index."""
    return mask.bit_count(), tuple(bits(mask))


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` including ``mask`` itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> frozenset[int]:
    """Drop every set contained in another one (and duplicates)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count, reverse=True):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class VertexTable:
    labels: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise MalformedInputError("vertex labels must be distinct")
        object.__setattr__(self, "index", index)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def lookup(self, label) -> int:
        try:
            return self.index[str(label)]
        except KeyError:
            raise UnknownVertexError(label) from None

    def mask(self, labels: Iterable) -> int:
        return mask_of_indices(self.lookup(x) for x in labels)

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite ASC given by its facets.

    ``facets`` is normalised to an antichain on construction.  Every vertex
    of the table must lie in some facet.
    """

    vertices: VertexTable
    facets: frozenset[int]

    def __post_init__(self):
        facets = maximal_masks(self.facets)
        if not facets:
            raise EmptyComplexError("a complex needs at least one facet (use [[]] for {∅})")
        object.__setattr__(self, "facets", facets)
        covered = 0
        for f in facets:
            covered |= f
        full = (1 << len(self.vertices)) - 1
        if covered & ~full:
            raise MalformedInputError("facet uses a vertex index outside the table")
        if covered != full:
            ghosts = self.vertices.names(full & ~covered)
            raise MalformedInputError(f"vertices in no facet: {', '.join(ghosts)}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_facets(cls, facet_lists: Iterable[Iterable], vertices: Sequence | None = None) -> "SimplicialComplex":
        """Build a complex from label lists.

        Labels are interned in first-appearance order unless ``vertices``
        fixes the order explicitly.  Dominated and repeated facets are dropped.
        """
        facet_lists = [[str(x) for x in f] for f in facet_lists]
        for f in facet_lists:
            if len(set(f)) != len(f):
                dup = next(x for x in f if f.count(x) > 1)
                raise MalformedInputError(f"label {dup!r} repeated within one facet")
        if vertices is None:
            order: dict[str, None] = {}
            for f in facet_lists:
                for x in f:
                    order.setdefault(x, None)
            table = VertexTable(tuple(order))
        else:
            table = VertexTable(tuple(vertices))
        masks = [table.mask(f) for f in facet_lists]
        return cls(table, frozenset(masks))

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The complex {∅}."""
        return cls(VertexTable(()), frozenset({0}))

    # -- basic numbers ------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    @property
    def n(self) -> int:
        """Size of a largest facet."""
        return max(f.bit_count() for f in self.facets)

    @property
    def dim(self) -> int:
        return self.n - 1

    @property
    def codim(self) -> int:
        return self.m - self.n

    def __len__(self):
        return self.m

    # -- faces --------------------------------------------------------------

    def sorted_facets(self) -> list[int]:
        return sorted(self.facets, key=canonical_key)

    def facet_labels(self) -> list[tuple[str, ...]]:
        return [self.vertices.names(f) for f in self.sorted_facets()]

    def facet_label_sets(self) -> frozenset[frozenset[str]]:
        """Facets as label sets; compares complexes independent of vertex order."""
        return frozenset(frozenset(self.vertices.names(f)) for f in self.facets)

    def contains_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def contains(self, sigma: Iterable) -> bool:
        return self.contains_mask(self.vertices.mask(sigma))

    def faces(self) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return out

    def faces_by_size(self) -> list[set[int]]:
        by_size: list[set[int]] = [set() for _ in range(self.n + 1)]
        for face in self.faces():
            by_size[face.bit_count()].add(face)
        return by_size

    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_-1, f_0, ..., f_dim)``; the leading 1 counts ∅."""
        return tuple(len(layer) for layer in self.faces_by_size())

    def euler_characteristic(self) -> int:
        fv = self.f_vector()
        return sum((-1) ** i * c for i, c in enumerate(fv[1:]))

    def is_pure(self) -> bool:
        sizes = {f.bit_count() for f in self.facets}
        return len(sizes) == 1

    def is_pseudomanifold(self) -> bool:
        """Pure, and every face of codimension one lies in exactly two facets."""
        if not self.is_pure():
            return False
        counts: dict[int, int] = {}
        for f in self.facets:
            for v in bits(f):
                ridge = f & ~(1 << v)
                counts[ridge] = counts.get(ridge, 0) + 1
        return all(c == 2 for c in counts.values())

    # -- derived complexes --------------------------------------------------

    def skeleton(self, j: int) -> "SimplicialComplex":
        """Faces of dimension at most ``j``."""
        if j < -1:
            raise ValueError("skeleton dimension must be >= -1")
        if j == -1:
            return SimplicialComplex.empty()
        size = j + 1
        masks: set[int] = set()
        for f in self.facets:
            if f.bit_count() <= size:
                masks.add(f)
            else:
                masks.update(mask_of_indices(c) for c in combinations(bits(f), size))
        return SimplicialComplex(self.vertices, frozenset(masks))

    def missing_faces(self, max_size: int | None = None) -> list[int]:
        """Inclusion-minimal non-faces, in canonical order.

        Candidates of size k are built only from (k-1)-faces whose every
        (k-1)-subset is a face; sizes stop at ``n + 1`` (or ``max_size``).
        """
        layers = self.faces_by_size()
        top = self.n + 1 if max_size is None else min(max_size, self.n + 1)
        out: list[int] = []
        for k in range(2, top + 1):
            below = layers[k - 1]
            here = layers[k] if k < len(layers) else set()
            for sigma in below:
                hi = sigma.bit_length()
                for v in range(hi, self.m):
                    tau = sigma | (1 << v)
                    if tau in here:
                        continue
                    if all((tau & ~(1 << u)) in below for u in bits(sigma)):
                        out.append(tau)
        out.sort(key=canonical_key)
        return out

    def is_s_flag(self, s: int) -> bool:
        """True iff every missing face has at most ``s + 1`` vertices."""
        if s < 1:
            raise ValueError("s must be >= 1")
        return all(mf.bit_count() <= s + 1 for mf in self.missing_faces())

    def flagification(self, s: int) -> "SimplicialComplex":
        """Largest complex on the same vertices with the same s-skeleton.

        Facets are the maximal vertex sets containing no missing face of size
        at most ``s + 1``, found by a Bron–Kerbosch style enumeration over
        that hereditary property.  Exponential in the worst case; meant for
        complexes with up to ~25 vertices.
        """
        if s < 1:
            raise ValueError("s must be >= 1")
        forbidden = self.missing_faces(max_size=s + 1)
        return SimplicialComplex(self.vertices, frozenset(maximal_sets(self.m, forbidden)))

    def relabel(self, labels: Sequence) -> "SimplicialComplex":
        if len(labels) != self.m:
            raise MalformedInputError("relabel needs one label per vertex")
        return SimplicialComplex(VertexTable(tuple(labels)), self.facets)

    def digest(self) -> str:
        text = "\n".join(" ".join(f) for f in self.facet_labels())
        header = " ".join(self.vertices.labels)
        return hashlib.sha256(f"{header}\n{text}".encode()).hexdigest()[:12]

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, n={self.n}, facets={len(self.facets)})"


def maximal_sets(m: int, forbidden: Iterable[int]) -> list[int]:
    """Maximal subsets of ``range(m)`` that contain no set from ``forbidden``.

    Generalises maximal-clique enumeration: with all forbidden sets of size
    two this is Bron–Kerbosch on the complement graph.
    """
    # rest[u]: forbidden sets through u, with u removed; u may join R iff none ⊆ R.
    rest: list[list[int]] = [[] for _ in range(m)]
    for mu in forbidden:
        for u in bits(mu):
            rest[u].append(mu & ~(1 << u))

    def ok(r: int, u: int) -> bool:
        return all(x & r != x for x in rest[u])

    found: list[int] = []

    def extend(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        while p:
            low = p & -p
            v = low.bit_length() - 1
            r2 = r | low
            p2 = 0
            for u in bits(p & ~low):
                if ok(r2, u):
                    p2 |= 1 << u
            x2 = 0
            for u in bits(x):
                if ok(r2, u):
                    x2 |= 1 << u
            extend(r2, p2, x2)
            p &= ~low
            x |= low

    singles = 0
    for u in range(m):
        if ok(0, u):
            singles |= 1 << u
    extend(0, singles, 0)
    return found


def join(k1: SimplicialComplex, k2: SimplicialComplex, prefixes: tuple[str, str] = ("a.", "b.")) -> SimplicialComplex:
    """Join ``K1 * K2``: facets are disjoint unions of a facet from each.

    Labels are kept when the two label sets are disjoint; otherwise every
    label is prefixed so the vertex sets become disjoint.
    """
    labels1, labels2 = k1.vertices.labels, k2.vertices.labels
    if set(labels1) & set(labels2):
        labels1 = tuple(prefixes[0] + x for x in labels1)
        labels2 = tuple(prefixes[1] + x for x in labels2)
    table = VertexTable(labels1 + labels2)
    shift = k1.m
    facets = frozenset(f1 | (f2 << shift) for f1 in k1.facets for f2 in k2.facets)
    return SimplicialComplex(table, facets)
