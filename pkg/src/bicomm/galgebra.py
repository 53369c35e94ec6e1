"""The free bicommutative algebra of rank d, in its polynomial model.

An element is a linear combination of the generators x_1..x_d plus a
polynomial in y_1..y_d, z_1..z_d all of whose monomials contain at least one
y and at least one z.  Products are computed through the two maps

    lam(x_i) = y_i,  rho(x_i) = z_i,  lam = rho = id on the square part,

by the rule ``a * b = lam(a) rho(b)``.  This reproduces x_i x_j = y_i z_j and
makes the square part a commutative associative algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .poly import (
    DimensionError,
    Monomial,
    Poly,
    format_rational,
    parse_rational,
)

__all__ = [
    "InvariantError",
    "GElement",
    "x",
    "gmul",
    "delta_ij",
    "delta_i_u",
    "substitute_product",
    "polarize",
    "multilinearize",
    "evaluate",
    "witness_eval",
    "to_json",
    "from_json",
]


class InvariantError(ValueError):
    """A square-part monomial lacks a y factor or a z factor."""


def _check_square(p: Poly) -> None:
    for m in p.terms:
        if sum(m.yexp) < 1 or sum(m.zexp) < 1:
            raise InvariantError(
                f"monomial {m.render()} needs y-degree >= 1 and z-degree >= 1"
            )


@dataclass(frozen=True)
class GElement:
    d: int
    linear: tuple
    square: Poly

    def __post_init__(self):
        lin = tuple(Fraction(c) for c in self.linear)
        if len(lin) != self.d:
            raise DimensionError(f"linear part has {len(lin)} entries, expected {self.d}")
        if self.square.d != self.d:
            raise DimensionError(f"square part lives in d={self.square.d}, expected {self.d}")
        _check_square(self.square)
        object.__setattr__(self, "linear", lin)

    @classmethod
    def from_poly(cls, p: Poly) -> "GElement":
        return cls(p.d, (0,) * p.d, p)

    @classmethod
    def zero(cls, d: int) -> "GElement":
        return cls(d, (0,) * d, Poly.zero(d))

    def is_zero(self) -> bool:
        return not any(self.linear) and self.square.is_zero()

    def has_linear(self) -> bool:
        return any(self.linear)

    def __add__(self, other: "GElement") -> "GElement":
        _same_d(self, other)
        return GElement(
            self.d,
            tuple(a + b for a, b in zip(self.linear, other.linear)),
            self.square + other.square,
        )

    def __neg__(self) -> "GElement":
        return GElement(self.d, tuple(-a for a in self.linear), -self.square)

    def __sub__(self, other: "GElement") -> "GElement":
        return self + (-other)

    def scale(self, c) -> "GElement":
        c = parse_rational(c)
        return GElement(self.d, tuple(c * a for a in self.linear), self.square.scale(c))

    def __mul__(self, other):
        if isinstance(other, GElement):
            return gmul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def lam(self) -> Poly:
        out = self.square
        for i, c in enumerate(self.linear, start=1):
            if c:
                out = out + Poly.var("y", i, self.d).scale(c)
        return out

    def rho(self) -> Poly:
        out = self.square
        for i, c in enumerate(self.linear, start=1):
            if c:
                out = out + Poly.var("z", i, self.d).scale(c)
        return out

    def degree_vectors(self) -> set:
        out = set()
        for i, c in enumerate(self.linear):
            if c:
                out.add(tuple(1 if k == i else 0 for k in range(self.d)))
        out.update(self.square.multidegrees())
        return out

    def is_multihomogeneous(self) -> bool:
        return len(self.degree_vectors()) <= 1

    def multidegree(self) -> tuple:
        vs = self.degree_vectors()
        if len(vs) != 1:
            raise ValueError("element is zero or not multihomogeneous")
        return next(iter(vs))

    def components(self) -> list:
        """Split into multihomogeneous components, sorted by degree vector."""
        out = []
        for deg in sorted(self.degree_vectors()):
            lin = tuple(c if sum(deg) == 1 and deg[i] == 1 else 0 for i, c in enumerate(self.linear))
            sq = Poly._raw(self.d, {m: c for m, c in self.square.terms.items() if m.multidegree() == deg})
            out.append(GElement(self.d, lin, sq))
        return out

    def embed(self, d: int) -> "GElement":
        return GElement(d, self.linear + (0,) * (d - self.d), self.square.embed(d))

    def render(self) -> str:
        parts = []
        for i, c in enumerate(self.linear, start=1):
            if c:
                parts.append((c, f"x{i}"))
        text = []
        for c, name in parts:
            sign = "-" if c < 0 else "+"
            body = name if abs(c) == 1 else f"{format_rational(abs(c))}*{name}"
            text.append((sign, body))
        out = ""
        for k, (sign, body) in enumerate(text):
            out += (("-" if sign == "-" else "") if k == 0 else f" {sign} ") + body
        if not self.square.is_zero():
            sq = self.square.render()
            if out:
                out += " - " + sq[1:] if sq.startswith("-") else " + " + sq
            else:
                out = sq
        return out or "0"

    def __str__(self) -> str:
        return self.render()


def _same_d(a: GElement, b: GElement) -> None:
    if a.d != b.d:
        raise DimensionError(f"variable counts differ: {a.d} != {b.d}")


def x(i: int, d: int) -> GElement:
    """The generator x_i of rank d."""
    if not 1 <= i <= d:
        raise DimensionError(f"index {i} outside 1..{d}")
    return GElement(d, tuple(1 if k == i - 1 else 0 for k in range(d)), Poly.zero(d))


def gmul(a: GElement, b: GElement) -> GElement:
    _same_d(a, b)
    return GElement.from_poly(a.lam() * b.rho())


def _index_check(d: int, *idx: int) -> None:
    for i in idx:
        if not 1 <= i <= d:
            raise ValueError(f"index {i} outside 1..{d}")


def delta_ij(a: GElement, i: int, j: int) -> GElement:
    """Derivation sending x_i, y_i, z_i to x_j, y_j, z_j."""
    if i == j:
        raise ValueError("delta_ij needs i != j")
    _index_check(a.d, i, j)
    d = a.d
    # only x_i has a nonzero image; x_j itself is sent to 0
    lin = [Fraction(0)] * d
    lin[j - 1] = a.linear[i - 1]
    sq = a.square.derive({("y", i): Poly.var("y", j, d), ("z", i): Poly.var("z", j, d)})
    return GElement(d, tuple(lin), sq)


def delta_i_u(a: GElement, i: int, u: GElement) -> GElement:
    """Derivation sending x_i, y_i, z_i to the square element u, other variables to 0."""
    _same_d(a, u)
    _index_check(a.d, i)
    if u.has_linear():
        raise ValueError("delta_i_u needs u with zero linear part")
    sq = a.square.derive({("y", i): u.square, ("z", i): u.square})
    c = a.linear[i - 1]
    if c:
        sq = sq + u.square.scale(c)
    return GElement.from_poly(sq)


def evaluate(a: GElement, images: Sequence[GElement]) -> GElement:
    """Apply the endomorphism x_i -> images[i-1].

    The images may live in a different rank; the result lives in theirs.
    """
    if len(images) != a.d:
        raise DimensionError(f"need {a.d} images, got {len(images)}")
    if not images:
        return a
    e = images[0].d
    for g in images:
        if g.d != e:
            raise DimensionError("images live in different ranks")
    lams = [g.lam() for g in images]
    rhos = [g.rho() for g in images]
    out = GElement.zero(e)
    for i, c in enumerate(a.linear):
        if c:
            out = out + images[i].scale(c)
    if a.square.is_zero():
        return out
    cache: dict = {}

    def power(kind, i, k):
        key = (kind, i, k)
        if key not in cache:
            base = lams[i] if kind == "y" else rhos[i]
            cache[key] = base ** k
        return cache[key]

    sq = Poly.zero(e)
    for m, c in a.square.terms.items():
        term = Poly.one(e).scale(c)
        for i, k in enumerate(m.yexp):
            if k:
                term = term * power("y", i, k)
        for i, k in enumerate(m.zexp):
            if k:
                term = term * power("z", i, k)
        sq = sq + term
    return out + GElement.from_poly(sq)


def substitute_product(a: GElement, i: int, j: int, k: int) -> GElement:
    """Substitute x_i -> x_j x_k, i.e. y_i and z_i both become y_j z_k."""
    _index_check(a.d, i, j, k)
    images = [x(t, a.d) for t in range(1, a.d + 1)]
    images[i - 1] = gmul(x(j, a.d), x(k, a.d))
    return evaluate(a, images)


def polarize(a: GElement, i: int, j: int) -> GElement:
    """Substitute x_i -> x_i + x_j."""
    if i == j:
        raise ValueError("polarize needs i != j")
    _index_check(a.d, i, j)
    images = [x(t, a.d) for t in range(1, a.d + 1)]
    images[i - 1] = x(i, a.d) + x(j, a.d)
    return evaluate(a, images)


def _linearize_monomial(m: Monomial, groups: list) -> list:
    """Terms of the full linearization of one monomial.

    ``groups[t]`` lists the fresh 0-based labels assigned to variable t.
    Returns (yset, zset, weight) triples.
    """
    partial = [((), (), 1)]
    for t, labels in enumerate(groups):
        a, b = m.yexp[t], m.zexp[t]
        w = factorial(a) * factorial(b)
        nxt = []
        for ys in combinations(labels, a):
            zs = tuple(l for l in labels if l not in ys)
            for py, pz, pw in partial:
                nxt.append((py + ys, pz + zs, pw * w))
        partial = nxt
    return partial


def multilinearize(a: GElement) -> GElement:
    """Full linearization of a multihomogeneous element.

    Variable t of degree k is replaced by k fresh variables, allocated in
    increasing order; the result is multilinear in deg(a) variables.  For a
    monomial with a copies of y_t and b copies of z_t the weight a! b! is
    applied, so symmetrizing back recovers ``prod_t deg_t!`` times ``a``.
    """
    if a.is_zero():
        raise ValueError("cannot linearize zero")
    if not a.is_multihomogeneous():
        raise ValueError("multilinearize needs a multihomogeneous element")
    deg = a.multidegree()
    n = sum(deg)
    if n == 1:
        return x(1, 1).scale(next(c for c in a.linear if c))
    groups = []
    nxt = 0
    for k in deg:
        groups.append(list(range(nxt, nxt + k)))
        nxt += k
    terms: dict = {}
    for m, c in a.square.terms.items():
        for ys, zs, w in _linearize_monomial(m, groups):
            ye = [0] * n
            ze = [0] * n
            for l in ys:
                ye[l] = 1
            for l in zs:
                ze[l] = 1
            mono = Monomial(tuple(ye), tuple(ze))
            terms[mono] = terms.get(mono, 0) + c * w
    return GElement.from_poly(Poly(n, terms))


def witness_eval(a: GElement) -> Fraction:
    """Image under the map to the one-dimensional algebra with a*a = a."""
    return sum(a.linear, Fraction(0)) + a.square.coefficient_sum()


# JSON


def to_record(a: GElement) -> dict:
    return {
        "d": a.d,
        "linear": [format_rational(c) for c in a.linear],
        "square": [
            {"coeff": format_rational(c), "y": list(m.yexp), "z": list(m.zexp)}
            for m, c in a.square.sorted_terms()
        ],
    }


def from_record(rec: dict) -> GElement:
    if not isinstance(rec, dict):
        raise ValueError("element record must be an object")
    try:
        d = int(rec["d"])
        linear = [parse_rational(c) for c in rec.get("linear", ["0"] * d)]
        terms = {}
        for t in rec.get("square", []):
            m = Monomial(tuple(int(e) for e in t["y"]), tuple(int(e) for e in t["z"]))
            if any(e < 0 for e in m.yexp + m.zexp):
                raise ValueError("negative exponent")
            terms[m] = terms.get(m, 0) + parse_rational(t["coeff"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed element record: {exc}") from exc
    return GElement(d, tuple(linear), Poly(d, terms))


def to_json(elements: Iterable[GElement]) -> str:
    return json.dumps([to_record(a) for a in elements], indent=2)


def from_json(text: str) -> list:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise ValueError("expected a JSON list of element records")
    return [from_record(r) for r in data]
