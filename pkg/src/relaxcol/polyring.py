"""Exact sparse integer polynomials in the vertex variables, and normal forms
modulo the Stanley–Reisner ideal of a complex.

Internally a monomial is a packed ``int``: variable ``i`` owns bits
``[16*i, 16*i + 16)`` holding its exponent, so monomial multiplication is
integer addition.  The public :class:`Monomial` type is the sparse
``{vertex index: exponent}`` view of such a key.

Degrees are combinatorial (each variable has degree 1).  Under the usual
topological grading where vertices sit in degree 2, every degree here doubles.

The Stanley–Reisner ideal is generated by monomials, so reduction simply
deletes each monomial whose support is not a face.  No Gröbner machinery is
involved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .asc import SimplicialComplex, VertexTable, bits
from .errors import ContextMismatchError, MalformedInputError, ResourceLimitError

_W = 16
_FIELD = (1 << _W) - 1
DEFAULT_TERM_LIMIT = 1 << 24
FACE_TABLE_LIMIT = 1 << 20


def _low_bits(m: int) -> int:
    return sum(1 << (_W * i) for i in range(m))


def _spread(mask: int) -> int:
    """Vertex bit-set -> packed key of the squarefree monomial on it."""
    out = 0
    for i in bits(mask):
        out |= 1 << (_W * i)
    return out


def _support_spread(key: int, low: int) -> int:
    """Bit ``16*i`` set iff variable ``i`` has a nonzero exponent in ``key``."""
    y = key | (key >> 8)
    y |= y >> 4
    y |= y >> 2
    y |= y >> 1
    return y & low


def _unpack(key: int) -> tuple[tuple[int, int], ...]:
    out = []
    i = 0
    while key:
        e = key & _FIELD
        if e:
            out.append((i, e))
        key >>= _W
        i += 1
    return tuple(out)


def _pack(exponents: Iterable[tuple[int, int]]) -> int:
    key = 0
    for var, e in exponents:
        if e < 0:
            raise ValueError("negative exponent")
        if e > _FIELD:
            raise OverflowError(f"exponent {e} exceeds {_FIELD}")
        key += e << (_W * var)
    return key


@dataclass(frozen=True, order=False)
class Monomial:
    """Sparse exponent map, stored as sorted ``(vertex index, exponent)`` pairs."""

    exponents: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, exps: Mapping[int, int]) -> "Monomial":
        return cls(tuple(sorted((v, e) for v, e in exps.items() if e)))

    @classmethod
    def squarefree(cls, indices: Iterable[int]) -> "Monomial":
        return cls(tuple((v, 1) for v in sorted(set(indices))))

    @property
    def key(self) -> int:
        return _pack(self.exponents)

    def support(self) -> int:
        """Vertex bit-set of the variables present."""
        mask = 0
        for v, _ in self.exponents:
            mask |= 1 << v
        return mask

    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # graded, then lexicographic on the variable multiset
        flat = tuple(v for v, e in self.exponents for _ in range(e))
        return len(flat), flat


_IDENT = re.compile(r"[A-Za-z_][\w.]*\Z")


def _var_token(label: str) -> str:
    return label if _IDENT.match(label) else f"[{label}]"


class Polynomial:
    """Immutable-by-convention polynomial over the integers.

    All operands of an arithmetic operation must share a vertex table.
    """

    __slots__ = ("table", "_terms", "_maxexp")

    def __init__(self, table: VertexTable, terms: Mapping[int, int] | None = None, _maxexp: int | None = None):
        self.table = table
        self._terms = {k: c for k, c in (terms or {}).items() if c}
        if _maxexp is None:
            _maxexp = max((e for k in self._terms for _, e in _unpack(k)), default=0)
        self._maxexp = _maxexp

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, table: VertexTable, c: int) -> "Polynomial":
        return cls(table, {0: int(c)}, 0)

    @classmethod
    def variable(cls, table: VertexTable, label) -> "Polynomial":
        i = table.lookup(label)
        return cls(table, {1 << (_W * i): 1}, 1)

    @classmethod
    def from_monomials(cls, table: VertexTable, terms: Mapping[Monomial, int]) -> "Polynomial":
        out: dict[int, int] = {}
        for mono, c in terms.items():
            if mono.exponents and mono.exponents[-1][0] >= len(table):
                raise ContextMismatchError("monomial uses a variable outside the table")
            out[mono.key] = out.get(mono.key, 0) + int(c)
        return cls(table, out)

    # -- inspection ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono.key, 0)

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order (graded, then lexicographic)."""
        items = [(Monomial(_unpack(k)), c) for k, c in self._terms.items()]
        items.sort(key=lambda t: t[0].sort_key())
        return items

    def degree(self) -> int:
        """Combinatorial total degree; -1 for the zero polynomial."""
        return max((Monomial(_unpack(k)).degree() for k in self._terms), default=-1)

    def homogeneous_part(self, d: int) -> "Polynomial":
        keep = {k: c for k, c in self._terms.items() if sum(e for _, e in _unpack(k)) == d}
        return Polynomial(self.table, keep, self._maxexp)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.table is not other.table and self.table.labels != other.table.labels:
            raise ContextMismatchError("polynomials over different vertex tables")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial.constant(self.table, other)
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Polynomial(self.table, out, max(self._maxexp, other._maxexp))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.table, {k: -c for k, c in self._terms.items()}, self._maxexp)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.table, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.table, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table.labels == other.table.labels and self._terms == other._terms

    __hash__ = None

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        labels = self.table.labels
        parts = []
        for mono, c in self.terms():
            factors = []
            for v, e in mono.exponents:
                tok = _var_token(labels[v])
                factors.append(tok if e == 1 else f"{tok}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def _ensure_exponent_room(p: Polynomial, q: Polynomial) -> None:
    if p._maxexp + q._maxexp <= _FIELD:
        return
    # the cached bounds are loose; recompute exactly before giving up
    def exact(poly):
        per: dict[int, int] = {}
        for k in poly._terms:
            for v, e in _unpack(k):
                per[v] = max(per.get(v, 0), e)
        return per

    ep, eq = exact(p), exact(q)
    if any(e + eq.get(v, 0) > _FIELD for v, e in ep.items()):
        raise OverflowError("exponent overflow in polynomial product")


def mul(p: Polynomial, q: Polynomial, limit: int = DEFAULT_TERM_LIMIT) -> Polynomial:
    p._check(q)
    _ensure_exponent_room(p, q)
    out: dict[int, int] = {}
    get = out.get
    for k1, c1 in p._terms.items():
        for k2, c2 in q._terms.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
        if len(out) > limit:
            raise ResourceLimitError(f"polynomial product exceeds {limit} terms")
    return Polynomial(p.table, out, p._maxexp + q._maxexp)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def neg(p: Polynomial) -> Polynomial:
    return -p


def _subset_mask(table: VertexTable, subset) -> int:
    if isinstance(subset, int):
        if subset >> len(table):
            raise ContextMismatchError("subset mask exceeds the vertex table")
        return subset
    return table.mask(subset)


def elementary_symmetric(table: VertexTable, subset, i: int) -> Polynomial:
    """e_i of the variables in ``subset`` (labels or a bit-set)."""
    if i < 0:
        raise ValueError("i must be >= 0")
    idx = bits(_subset_mask(table, subset))
    terms = {sum(1 << (_W * v) for v in combo): 1 for combo in combinations(idx, i)}
    return Polynomial(table, terms, 1 if i else 0)


def c_leq(table: VertexTable, subset, s: int, limit: int = DEFAULT_TERM_LIMIT) -> Polynomial:
    """1 + e_1 + ... + e_s of the variables in ``subset``."""
    if s < 0:
        raise ValueError("s must be >= 0")
    mask = _subset_mask(table, subset)
    idx = bits(mask)
    top = min(s, len(idx))
    terms: dict[int, int] = {}
    for i in range(top + 1):
        for combo in combinations(idx, i):
            terms[sum(1 << (_W * v) for v in combo)] = 1
            if len(terms) > limit:
                raise ResourceLimitError(f"c_leq expansion exceeds {limit} terms")
    return Polynomial(table, terms, 1 if top else 0)


def total_chern(table: VertexTable, subset=None, limit: int = DEFAULT_TERM_LIMIT) -> Polynomial:
    """∏(1 + v) over ``subset`` (default: every vertex), fully expanded."""
    mask = (1 << len(table)) - 1 if subset is None else _subset_mask(table, subset)
    k = mask.bit_count()
    if (1 << k) > limit:
        raise ResourceLimitError(f"c(V) on {k} variables has 2^{k} terms, over the limit {limit}")
    return c_leq(table, mask, k, limit)


class SRContext:
    """A complex together with reduction modulo its Stanley–Reisner ideal."""

    def __init__(self, complex: SimplicialComplex, limit: int = DEFAULT_TERM_LIMIT):
        self.complex = complex
        self.table = complex.vertices
        self.limit = limit
        self._low = _low_bits(complex.m)
        self._missing = [_spread(mf) for mf in complex.missing_faces()]
        # supports of surviving monomials, when small enough to list outright
        self._faces: frozenset[int] | None = None
        if sum(1 << f.bit_count() for f in complex.facets) <= FACE_TABLE_LIMIT:
            self._faces = frozenset(_spread(f) for f in complex.faces())

    @property
    def missing_faces(self) -> list[int]:
        return self.complex.missing_faces()

    def _check(self, p: Polynomial) -> None:
        if p.table is not self.table and p.table.labels != self.table.labels:
            raise ContextMismatchError("polynomial is over a different vertex table")

    def _survives(self, key: int, memo: dict[int, bool]) -> bool:
        sup = _support_spread(key, self._low)
        if self._faces is not None:
            return sup in self._faces
        hit = memo.get(sup)
        if hit is None:
            hit = not any(mf & sup == mf for mf in self._missing)
            memo[sup] = hit
        return hit

    def is_face_monomial(self, mono: Monomial) -> bool:
        return self.complex.contains_mask(mono.support())

    def normal_form(self, p: Polynomial) -> Polynomial:
        self._check(p)
        if not self._missing:
            return Polynomial(self.table, p._terms, p._maxexp)
        memo: dict[int, bool] = {}
        keep = {k: c for k, c in p._terms.items() if self._survives(k, memo)}
        return Polynomial(self.table, keep, p._maxexp)

    def mul(self, p: Polynomial, q: Polynomial) -> Polynomial:
        """Normal form of ``p * q``; monomials in the ideal are never stored."""
        self._check(p)
        self._check(q)
        _ensure_exponent_room(p, q)
        out: dict[int, int] = {}
        get = out.get
        faces = self._faces
        if faces is not None:
            low = self._low
            dead: set[int] = set()
            for k1, c1 in p._terms.items():
                for k2, c2 in q._terms.items():
                    k = k1 + k2
                    prev = get(k)
                    if prev is not None:
                        out[k] = prev + c1 * c2
                        continue
                    if k in dead:
                        continue
                    y = k | (k >> 8)
                    y |= y >> 4
                    y |= y >> 2
                    y |= y >> 1
                    if y & low in faces:
                        out[k] = c1 * c2
                    else:
                        dead.add(k)
                if len(out) > self.limit:
                    raise ResourceLimitError(f"product exceeds {self.limit} terms")
            return Polynomial(self.table, out, p._maxexp + q._maxexp)
        memo: dict[int, bool] = {}
        survives = self._survives
        for k1, c1 in p._terms.items():
            for k2, c2 in q._terms.items():
                k = k1 + k2
                prev = get(k)
                if prev is None:
                    if not survives(k, memo):
                        continue
                    out[k] = c1 * c2
                else:
                    out[k] = prev + c1 * c2
            if len(out) > self.limit:
                raise ResourceLimitError(f"product exceeds {self.limit} terms")
        return Polynomial(self.table, out, p._maxexp + q._maxexp)

    def product(self, factors: Iterable[Polynomial]) -> Polynomial:
        out = Polynomial.constant(self.table, 1)
        for f in factors:
            out = self.mul(out, f)
        return out

    def total_chern(self) -> Polynomial:
        """Normal form of c(V), built one factor (1 + v) at a time."""
        return self.product(c_leq(self.table, 1 << i, 1) for i in range(len(self.table)))


def normal_form(p: Polynomial, ctx: SRContext) -> Polynomial:
    return ctx.normal_form(p)


def equal_in_sr(p: Polynomial, q: Polynomial, ctx: SRContext) -> bool:
    return ctx.normal_form(p) == ctx.normal_form(q)


def is_s_to_1_by_identity(f, s: int, table: VertexTable | None = None) -> bool:
    """Whether c(V) = ∏_p c_≤s(f⁻¹p) holds in the free polynomial ring.

    ``f`` is a coloring or a plain sequence of color ids, one per vertex.
    """
    assignment = list(getattr(f, "assignment", f))
    if table is None:
        table = VertexTable(tuple(f"v{i + 1}" for i in range(len(assignment))))
    elif len(table) != len(assignment):
        raise ContextMismatchError("coloring length differs from the vertex table")
    fibers: dict[int, int] = {}
    for v, color in enumerate(assignment):
        fibers[color] = fibers.get(color, 0) | (1 << v)
    rhs = Polynomial.constant(table, 1)
    for color in sorted(fibers):
        rhs = rhs * c_leq(table, fibers[color], s)
    return rhs == total_chern(table)


_TOKEN = re.compile(r"\s*(?:(\d+)|(\[[^\]]*\])|([A-Za-z_][\w.]*)|(\S))")


def parse_polynomial(text: str, table: VertexTable) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_text` for the same vertex table."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, bracket, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif bracket is not None:
            tokens.append(("var", table.lookup(bracket[1:-1])))
        elif name is not None:
            tokens.append(("var", table.lookup(name)))
        else:
            if op not in "+-*^":
                raise MalformedInputError(f"unexpected character {op!r} in polynomial")
            tokens.append(("op", op))
        pos = m.end()

    out: dict[int, int] = {}
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    sign = 1
    if peek() == ("op", "-"):
        sign, i = -1, i + 1
    while True:
        coeff, key, expect = 1, 0, True
        while expect:
            kind, val = peek()
            if kind == "num":
                coeff *= val
                i += 1
            elif kind == "var":
                i += 1
                e = 1
                if peek() == ("op", "^"):
                    i += 1
                    kind2, e = peek()
                    if kind2 != "num":
                        raise MalformedInputError("exponent must be an integer")
                    i += 1
                key += e << (_W * val)
            else:
                raise MalformedInputError("expected a number or variable")
            expect = peek() == ("op", "*")
            if expect:
                i += 1
        out[key] = out.get(key, 0) + sign * coeff
        kind, val = peek()
        if kind is None:
            break
        if kind != "op" or val not in "+-":
            raise MalformedInputError("expected + or - between terms")
        sign = 1 if val == "+" else -1
        i += 1
    return Polynomial(table, out)
