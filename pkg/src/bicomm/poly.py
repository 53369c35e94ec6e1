"""Exact sparse polynomials in y_1..y_d, z_1..z_d over the rationals.

A :class:`Poly` is an immutable mapping from :class:`Monomial` to
:class:`fractions.Fraction`.  Monomials are ordered graded-lexicographically
on the concatenated exponent vector ``yexp + zexp``; this order fixes the
canonical rendering and the pivot order of every elimination.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "DimensionError",
    "PreconditionError",
    "Monomial",
    "Poly",
    "Echelon",
    "parse_rational",
    "format_rational",
    "add",
    "scale",
    "mul",
    "substitute",
    "multihomogeneous_component",
    "rank_of_span",
    "coordinates",
    "nullspace",
]


class DimensionError(ValueError):
    """Operands carry different variable counts."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    text = str(text).strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Monomial(NamedTuple):
    yexp: tuple
    zexp: tuple

    @property
    def d(self) -> int:
        return len(self.yexp)

    @property
    def key(self) -> tuple:
        return self.yexp + self.zexp

    @property
    def degree(self) -> int:
        return sum(self.yexp) + sum(self.zexp)

    def sort_key(self):
        # graded lex on (yexp, zexp); larger sorts later
        return (self.degree, self.key)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(a + b for a, b in zip(self.yexp, other.yexp)),
            tuple(a + b for a, b in zip(self.zexp, other.zexp)),
        )

    def multidegree(self) -> tuple:
        return tuple(a + b for a, b in zip(self.yexp, self.zexp))

    def render(self) -> str:
        parts = []
        for name, exps in (("y", self.yexp), ("z", self.zexp)):
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e > 1:
                    parts.append(f"{name}{i}^{e}")
        return "*".join(parts) if parts else "1"

    @classmethod
    def one(cls, d: int) -> "Monomial":
        return cls((0,) * d, (0,) * d)


def _check_d(p: "Poly", q: "Poly") -> None:
    if p.d != q.d:
        raise DimensionError(f"variable counts differ: {p.d} != {q.d}")


class Poly:
    """Element of K[Y_d, Z_d] with K = Q."""

    __slots__ = ("d", "terms", "_hash")

    def __init__(self, d: int, terms: Mapping[Monomial, object] | None = None):
        self.d = int(d)
        clean = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(m, Monomial):
                    m = Monomial(tuple(m[0]), tuple(m[1]))
                if len(m.yexp) != self.d or len(m.zexp) != self.d:
                    raise DimensionError(f"monomial {m} does not live in d={self.d}")
                c = Fraction(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
                    if not clean[m]:
                        del clean[m]
        self.terms = clean
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, d: int) -> "Poly":
        return cls(d)

    @classmethod
    def one(cls, d: int) -> "Poly":
        return cls(d, {Monomial.one(d): 1})

    @classmethod
    def var(cls, kind: str, i: int, d: int) -> "Poly":
        """The variable ``y_i`` or ``z_i`` (1-based index)."""
        if not 1 <= i <= d:
            raise DimensionError(f"index {i} outside 1..{d}")
        e = tuple(1 if k == i - 1 else 0 for k in range(d))
        z = (0,) * d
        if kind == "y":
            return cls(d, {Monomial(e, z): 1})
        if kind == "z":
            return cls(d, {Monomial(z, e): 1})
        raise ValueError(f"unknown variable kind {kind!r}")

    @classmethod
    def monomial(cls, yexp: Sequence[int], zexp: Sequence[int], coeff=1) -> "Poly":
        return cls(len(yexp), {Monomial(tuple(yexp), tuple(zexp)): coeff})

    @classmethod
    def _raw(cls, d: int, terms: dict) -> "Poly":
        # trusted constructor: terms already nonzero Fractions keyed by Monomial
        p = cls.__new__(cls)
        p.d = d
        p.terms = terms
        p._hash = None
        return p

    # basic protocol
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.d == other.d and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {Monomial.one(self.d): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.d, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.d}, {self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def sorted_terms(self) -> list:
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key(), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = m.render()
            if mono == "1":
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rational(a)}*{mono}"
            if k == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    # arithmetic
    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        _check_d(self, other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly._raw(self.d, terms)

    def __neg__(self) -> "Poly":
        return Poly._raw(self.d, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly._raw(self.d, {})
        return Poly._raw(self.d, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        _check_d(self, other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.times(m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Poly._raw(self.d, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one(self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # structure
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    def multidegrees(self) -> set:
        return {m.multidegree() for m in self.terms}

    def is_multihomogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1

    def embed(self, d: int) -> "Poly":
        """Pad exponent vectors with zeros to live in ``d >= self.d`` variables."""
        if d < self.d:
            raise DimensionError(f"cannot embed d={self.d} into d={d}")
        pad = (0,) * (d - self.d)
        return Poly._raw(
            d, {Monomial(m.yexp + pad, m.zexp + pad): c for m, c in self.terms.items()}
        )

    def coefficient_sum(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def derive(self, images: Mapping[tuple, "Poly"]) -> "Poly":
        """Apply the derivation sending variable ``(kind, i)`` to ``images[(kind, i)]``.

        Variables missing from ``images`` are sent to zero.
        """
        d = self.d
        out: dict = {}
        for m, c in self.terms.items():
            for kind, exps in (("y", m.yexp), ("z", m.zexp)):
                for idx, e in enumerate(exps):
                    if not e:
                        continue
                    img = images.get((kind, idx + 1))
                    if img is None or not img.terms:
                        continue
                    _check_d(self, img)
                    lowered = list(exps)
                    lowered[idx] -= 1
                    rest = Monomial(tuple(lowered), m.zexp) if kind == "y" else Monomial(m.yexp, tuple(lowered))
                    for m2, c2 in img.terms.items():
                        mm = rest.times(m2)
                        s = out.get(mm, 0) + e * c * c2
                        if s:
                            out[mm] = s
                        else:
                            out.pop(mm, None)
        return Poly._raw(d, out)


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def scale(c, p: Poly) -> Poly:
    return p.scale(parse_rational(c))


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def _parse_var(v) -> tuple:
    if isinstance(v, tuple):
        return (v[0], int(v[1]))
    v = str(v)
    return (v[0], int(v[1:]))


def substitute(p: Poly, assignment: Mapping) -> Poly:
    """Simultaneously replace variables by polynomials.

    Keys of ``assignment`` are ``"y2"``-style names or ``("y", 2)`` tuples;
    unassigned variables stay put.
    """
    d = p.d
    images = {}
    for k, img in assignment.items():
        if not isinstance(img, Poly):
            raise TypeError("substitution images must be Poly")
        if img.d != d:
            raise DimensionError(f"image lives in d={img.d}, expected {d}")
        images[_parse_var(k)] = img
    for kind in "yz":
        for i in range(1, d + 1):
            images.setdefault((kind, i), Poly.var(kind, i, d))
    powers: dict = {}

    def power(var, e):
        key = (var, e)
        if key not in powers:
            powers[key] = images[var] ** e
        return powers[key]

    total = Poly.zero(d)
    for m, c in p.terms.items():
        term = Poly.one(d).scale(c)
        for kind, exps in (("y", m.yexp), ("z", m.zexp)):
            for idx, e in enumerate(exps):
                if e:
                    term = term * power((kind, idx + 1), e)
        total = total + term
    return total


def multihomogeneous_component(p: Poly, degrees: Sequence[int]) -> Poly:
    target = tuple(degrees)
    if len(target) != p.d:
        raise DimensionError(f"degree vector has length {len(target)}, expected {p.d}")
    return Poly._raw(p.d, {m: c for m, c in p.terms.items() if m.multidegree() == target})


def _content(values) -> int:
    return reduce(gcd, values, 0)


def _integer_row(vec: Mapping) -> dict:
    """Scale a rational vector to a primitive integer vector with the same span."""
    items = [(k, Fraction(v)) for k, v in vec.items() if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = den * v.denominator // gcd(den, v.denominator)
    row = {k: int(v * den) for k, v in items}
    g = _content(row.values())
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Incremental exact row echelon form over Q.

    Rows are sparse dicts keyed by integer column indices; smaller indices
    are eliminated first.  Entries are kept as primitive integer vectors, which
    span the same Q-space as the inputs.
    """

    __slots__ = ("rows",)

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.rows: dict = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon()
        e.rows = dict(self.rows)
        return e

    def reduce(self, vec: Mapping) -> dict:
        v = _integer_row(vec)
        rows = self.rows
        while v:
            c = min(v)
            r = rows.get(c)
            if r is None:
                # leading column is free; later pivot columns are left as-is
                return v
            a, b = v[c], r[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            nv = {k: b * x for k, x in v.items()}
            for k, x in r.items():
                s = nv.get(k, 0) - a * x
                if s:
                    nv[k] = s
                else:
                    nv.pop(k, None)
            g = _content(nv.values())
            if g > 1:
                nv = {k: x // g for k, x in nv.items()}
            v = nv
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True iff it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        c = min(r)
        if r[c] < 0:
            r = {k: -x for k, x in r.items()}
        self.rows[c] = r
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def vectors(self) -> list:
        return [self.rows[c] for c in sorted(self.rows)]


class _MonomialIndex:
    """Column indexing of monomials in descending graded-lex order."""

    def __init__(self, polys: Iterable[Poly]):
        monos = set()
        for p in polys:
            monos.update(p.terms)
        self.monomials = sorted(monos, key=lambda m: m.sort_key(), reverse=True)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def vector(self, p: Poly) -> dict:
        idx = self.index
        return {idx[m]: c for m, c in p.terms.items()}


def _common_d(ps: Sequence[Poly]) -> None:
    if ps:
        d = ps[0].d
        for p in ps[1:]:
            if p.d != d:
                raise DimensionError("polynomials live in different d")


def rank_of_span(ps: Sequence[Poly]) -> int:
    ps = list(ps)
    _common_d(ps)
    index = _MonomialIndex(ps)
    return Echelon(index.vector(p) for p in ps).rank


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list:
    """Basis of {x : rows @ x = 0} over Q, as lists of Fractions.

    Computed through reduced row echelon form; free variables are taken in
    increasing column order.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -m[i][fcol]
        basis.append(x)
    return basis


def coordinates(p: Poly, basis: Sequence[Poly]) -> list | None:
    """Unique coefficients expressing ``p`` in ``basis``; None if ``p`` is outside the span."""
    basis = list(basis)
    _common_d(basis + [p])
    if rank_of_span(basis) != len(basis):
        raise PreconditionError("coordinates() needs a linearly independent basis")
    index = _MonomialIndex(basis + [p])
    cols = [index.vector(b) for b in basis]
    target = index.vector(p)
    # solve sum_j c_j * cols[j] = target; rows indexed by monomials
    n = len(basis)
    rows = []
    for mi in range(len(index.monomials)):
        rows.append([cols[j].get(mi, 0) for j in range(n)] + [-target.get(mi, 0)])
    kernel = nullspace(rows, n + 1)
    for vec in kernel:
        if vec[n] != 0:
            return [c / vec[n] for c in vec[:n]]
    return None
