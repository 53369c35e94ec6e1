"""Highest weight vectors of two-row shapes in the rank-2 model.

All computations here fix d = 2.  A multihomogeneous element of degree
(l1, l2) is a highest weight vector when the raising derivation Delta_21
(y2 -> y1, z2 -> z1) kills it.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import NamedTuple, Sequence

from .galgebra import GElement, delta_ij, x
from .poly import Echelon, Monomial, Poly, coordinates, nullspace, rank_of_span

__all__ = [
    "UnsupportedShapeError",
    "MembershipError",
    "Partition",
    "HwvBasis",
    "parse_partition",
    "two_row_partitions",
    "weight_monomials",
    "hwv_basis",
    "is_hwv",
    "raise21",
    "hwv_subspace",
    "hwv_coordinates",
    "free_multiplicity",
    "m_formula",
    "hook_length_dim",
    "normalize_line",
]


class UnsupportedShapeError(ValueError):
    """Partition with three or more rows, or otherwise outside the supported range."""


class MembershipError(ValueError):
    """Vector lies outside the span it was expected in."""


class Partition(NamedTuple):
    rows: tuple

    @classmethod
    def of(cls, *rows) -> "Partition":
        if len(rows) == 1 and isinstance(rows[0], (tuple, list, Partition)):
            rows = tuple(rows[0].rows if isinstance(rows[0], Partition) else rows[0])
        rows = tuple(int(r) for r in rows if int(r) != 0)
        if not rows:
            raise ValueError("empty partition")
        if any(r < 0 for r in rows):
            raise ValueError(f"negative part in {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"parts of {rows} are not weakly decreasing")
        return cls(rows)

    @property
    def n(self) -> int:
        return sum(self.rows)

    @property
    def l1(self) -> int:
        return self.rows[0]

    @property
    def l2(self) -> int:
        return self.rows[1] if len(self.rows) > 1 else 0

    def pair(self) -> tuple:
        self.require_two_rows()
        return (self.l1, self.l2)

    def require_two_rows(self) -> None:
        if len(self.rows) > 2:
            raise UnsupportedShapeError(f"shape {self} has more than two rows")

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.rows) + ")"


def parse_partition(text) -> Partition:
    if isinstance(text, Partition):
        return text
    if isinstance(text, (tuple, list)):
        return Partition.of(tuple(text))
    parts = [p for p in str(text).replace(" ", "").strip("()").split(",") if p]
    try:
        rows = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc
    if any(r <= 0 for r in rows):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition.of(tuple(rows))


def two_row_partitions(n: int) -> list:
    """Two-row partitions of n, ordered (n), (n-1,1), ..."""
    return [Partition.of(n - k, k) for k in range(0, n // 2 + 1)]


def weight_monomials(weight: Sequence[int]) -> list:
    """Square monomials of rank 2 with the given per-variable degree, descending order."""
    w1, w2 = weight
    out = []
    if w1 < 0 or w2 < 0:
        return out
    for a1 in range(w1 + 1):
        for a2 in range(w2 + 1):
            if a1 + a2 == 0 or a1 + a2 == w1 + w2:
                continue
            out.append(Monomial((a1, a2), (w1 - a1, w2 - a2)))
    out.sort(key=lambda m: m.sort_key(), reverse=True)
    return out


class HwvBasis(NamedTuple):
    partition: Partition
    vectors: tuple  # Poly in d=2, increasing j
    elements: tuple  # the same as GElements; (x1,) for the shape (1)


def _y(i):
    return Poly.var("y", i, 2)


def _z(i):
    return Poly.var("z", i, 2)


def hwv_basis(lam) -> HwvBasis:
    lam = parse_partition(lam)
    lam.require_two_rows()
    l1, l2 = lam.l1, lam.l2
    if lam.n == 1:
        return HwvBasis(lam, (), (x(1, 2),))
    vecs = []
    if l2 == 0:
        for j in range(1, l1):
            vecs.append(_y(1) ** j * _z(1) ** (l1 - j))
    else:
        s = _y(1) * _z(2) - _y(2) * _z(1)
        core = s ** l2
        for j in range(0, l1 - l2 + 1):
            vecs.append(_y(1) ** j * core * _z(1) ** (l1 - l2 - j))
    return HwvBasis(lam, tuple(vecs), tuple(GElement.from_poly(v) for v in vecs))


def raise21(p: Poly) -> Poly:
    """The raising derivation y2 -> y1, z2 -> z1."""
    return p.derive({("y", 2): _y(1), ("z", 2): _z(1)})


def is_hwv(p) -> bool:
    if isinstance(p, GElement):
        if p.has_linear():
            if not p.is_multihomogeneous():
                raise ValueError("element is not multihomogeneous")
            deg = p.multidegree()
            return deg[0] == 1 if p.d >= 1 else False
        p = p.square
    if p.is_zero():
        raise ValueError("is_hwv needs a nonzero element")
    if not p.is_multihomogeneous():
        raise ValueError("is_hwv needs a multihomogeneous element")
    g = GElement.from_poly(p)
    for i in range(2, p.d + 1):
        for j in range(1, i):
            if not delta_ij(g, i, j).is_zero():
                return False
    return True


def _check_weight(ps: Sequence[Poly], lam: Partition) -> None:
    target = (lam.l1, lam.l2)
    for p in ps:
        if p.d != 2:
            raise ValueError("hwv computations use rank 2")
        for deg in p.multidegrees():
            if deg != target:
                raise ValueError(f"component of degree {deg} does not match {target}")


def hwv_subspace(ps: Sequence[Poly], lam) -> list:
    """Basis of the Delta_21-kernel inside span(ps)."""
    lam = parse_partition(lam)
    lam.require_two_rows()
    ps = [p for p in ps if not p.is_zero()]
    if not ps:
        return []
    _check_weight(ps, lam)
    # independent subset first
    ech = Echelon()
    monos = weight_monomials(lam.pair())
    idx = {m: i for i, m in enumerate(monos)}
    basis = []
    for p in ps:
        if ech.add({idx[m]: c for m, c in p.terms.items()}):
            basis.append(p)
    images = [raise21(p) for p in basis]
    tgt = weight_monomials((lam.l1 + 1, lam.l2 - 1))
    tidx = {m: i for i, m in enumerate(tgt)}
    rows = [[Fraction(0)] * len(basis) for _ in tgt]
    for k, img in enumerate(images):
        for m, c in img.terms.items():
            rows[tidx[m]][k] = c
    out = []
    for vec in nullspace(rows, len(basis)):
        v = Poly.zero(2)
        for c, b in zip(vec, basis):
            if c:
                v = v + b.scale(c)
        out.append(v)
    return out


def hwv_coordinates(p: Poly, lam) -> list:
    lam = parse_partition(lam)
    if isinstance(p, GElement):
        p = p.square
    basis = hwv_basis(lam).vectors
    coords = coordinates(p, basis)
    if coords is None:
        raise MembershipError(f"{p.render()} is not in the span of the hwv basis of {lam}")
    return coords


def free_multiplicity(lam) -> int:
    """Multiplicity of the shape in the free algebra, by direct kernel computation."""
    lam = parse_partition(lam)
    lam.require_two_rows()
    if lam.n == 1:
        return 1
    monos = weight_monomials(lam.pair())
    polys = [Poly._raw(2, {m: Fraction(1)}) for m in monos]
    return len(hwv_subspace(polys, lam))


def m_formula(lam) -> int:
    """Closed form: 1 for (1), n-1 for (n), n - 2*l2 + 1 otherwise."""
    lam = parse_partition(lam)
    lam.require_two_rows()
    n = lam.n
    if n == 1:
        return 1
    if lam.l2 == 0:
        return n - 1
    return n - 2 * lam.l2 + 1


def hook_length_dim(lam) -> int:
    """Number of standard tableaux of the shape (hook length formula)."""
    lam = parse_partition(lam)
    rows = lam.rows
    cols = [sum(1 for r in rows if r > c) for c in range(rows[0])]
    prod = 1
    for i, r in enumerate(rows):
        for c in range(r):
            prod *= (r - c - 1) + (cols[c] - i - 1) + 1
    return factorial(lam.n) // prod


def normalize_line(coords: Sequence) -> tuple:
    """Scale so that the first nonzero entry is 1."""
    coords = [Fraction(c) for c in coords]
    lead = next((c for c in coords if c), None)
    if lead is None:
        return tuple(coords)
    return tuple(c / lead for c in coords)


def span_rank(ps: Sequence[Poly]) -> int:
    return rank_of_span(list(ps))
