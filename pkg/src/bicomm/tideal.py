"""Consequences of identities in the free bicommutative algebra.

The T-ideal generated by a multihomogeneous element f is computed one weight
at a time inside the rank-2 model.  In characteristic 0 it is spanned by the
monomial multiples of the values L(b_1, ..., b_N), where L is the full
linearization of f and every b_t is a basis element (x_1, x_2 or a square
monomial).  Writing I_mu for the weight-mu component this gives

    I_mu = sum_i (y_i I_{mu - e_i} + z_i I_{mu - e_i}) + span{L(b) of weight mu},

which is what :class:`GeneratorIdeal` evaluates with memoization.  The ideal of
several generators is the sum of their ideals.

An independent check lives in :func:`oracle_multilinear_dim`, which works in
the multilinear part of G_n directly and never touches the rank-2 model.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, gcd
from typing import Iterable, Sequence

from .galgebra import GElement, multilinearize
from .hwv import (
    Partition,
    free_multiplicity,
    hook_length_dim,
    parse_partition,
    raise21,
    two_row_partitions,
    weight_monomials,
)
from .poly import Echelon, Poly

__all__ = [
    "CapExceededError",
    "VarietySpec",
    "MultiplicityTable",
    "GeneratorIdeal",
    "Engine",
    "default_engine",
    "consequence_span",
    "ideal_dim",
    "ideal_hwv_part",
    "multiplicity",
    "cocharacter",
    "implies",
    "quotient_spanned_by",
    "oracle_multilinear_dim",
    "oracle_codimension",
    "character_codimension",
    "ORACLE_CAP",
]

ORACLE_CAP = 10


class CapExceededError(ValueError):
    """Requested degree is above the configured cap."""


def _split(g: GElement) -> list:
    if g.is_zero():
        raise ValueError("zero generator")
    return g.components()


@dataclass(frozen=True)
class VarietySpec:
    """A finite set of identities; the empty set defines the whole variety."""

    generators: tuple = ()
    label: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not isinstance(g, GElement):
                raise TypeError("generators must be GElement")
            if g.is_zero():
                raise ValueError("zero generator")
        object.__setattr__(self, "generators", gens)

    def components(self) -> list:
        out = []
        for g in self.generators:
            for c in _split(g):
                if c not in out:
                    out.append(c)
        return out

    def with_generators(self, extra: Iterable[GElement], label: str | None = None) -> "VarietySpec":
        return VarietySpec(self.generators + tuple(extra), self.label if label is None else label)

    def union(self, other: "VarietySpec") -> "VarietySpec":
        """Identities of both; defines the intersection of the two varieties."""
        lab = " + ".join(l for l in (self.label, other.label) if l)
        return VarietySpec(self.generators + other.generators, lab)

    def min_degree(self) -> int | None:
        degs = [sum(c.multidegree()) for c in self.components()]
        return min(degs) if degs else None


class MultiplicityTable:
    """Multiplicities keyed by (n, partition)."""

    def __init__(self, entries: dict | None = None):
        self.entries: dict = {}
        for (n, lam), m in (entries or {}).items():
            self.set(n, lam, m)

    def set(self, n: int, lam, m: int) -> None:
        lam = parse_partition(lam)
        if lam.n != n:
            raise ValueError(f"{lam} is not a partition of {n}")
        if m < 0:
            raise ValueError("negative multiplicity")
        self.entries[(n, lam)] = int(m)

    def row(self, n: int) -> dict:
        return {lam: m for (k, lam), m in sorted(self.entries.items()) if k == n}

    def degrees(self) -> list:
        return sorted({k for k, _ in self.entries})

    def row_json(self, n: int) -> dict:
        rows = [
            {"lambda": [lam.l1, lam.l2], "m": m}
            for lam, m in sorted(self.row(n).items(), key=lambda t: (-t[0].l1, t[0].l2))
        ]
        return {"n": n, "rows": rows}

    def to_json(self) -> list:
        return [self.row_json(n) for n in self.degrees()]

    @classmethod
    def from_row(cls, n: int, row: dict) -> "MultiplicityTable":
        t = cls()
        for lam, m in row.items():
            t.set(n, lam, m)
        return t

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiplicityTable) and self.entries == other.entries


# weight-space plumbing


class _Weight:
    """Column indexing of the weight-mu square monomials in rank 2."""

    _cache: dict = {}

    def __init__(self, mu: tuple):
        self.mu = mu
        self.monomials = weight_monomials(mu)
        self.index = {m.key: i for i, m in enumerate(self.monomials)}

    @classmethod
    def get(cls, mu: tuple) -> "_Weight":
        w = cls._cache.get(mu)
        if w is None:
            w = cls._cache[mu] = _Weight(mu)
        return w

    def __len__(self) -> int:
        return len(self.monomials)

    def vector(self, p: Poly) -> dict:
        idx = self.index
        return {idx[m.key]: c for m, c in p.terms.items()}

    def poly(self, vec: dict) -> Poly:
        return Poly(2, {self.monomials[i]: c for i, c in vec.items()})


_SHIFT_CACHE: dict = {}


def _shift_map(mu: tuple, var: int) -> list:
    """Column map from weight mu - e_var to mu for multiplication by y_var and z_var."""
    key = (mu, var)
    if key in _SHIFT_CACHE:
        return _SHIFT_CACHE[key]
    lower = list(mu)
    lower[var] -= 1
    src = _Weight.get(tuple(lower))
    dst = _Weight.get(mu)
    maps = []
    for pos in (var, 2 + var):  # y_var, z_var inside the 4-tuple key
        col = []
        for m in src.monomials:
            k = list(m.key)
            k[pos] += 1
            col.append(dst.index[tuple(k)])
        maps.append(col)
    _SHIFT_CACHE[key] = maps
    return maps


class GeneratorIdeal:
    """Weight components of the T-ideal of one multihomogeneous generator."""

    def __init__(self, gen: GElement):
        if not gen.is_multihomogeneous():
            raise ValueError("generator must be multihomogeneous")
        self.gen = gen
        deg = gen.multidegree()
        self.degree = sum(deg)
        self.full = self.degree == 1
        self.groups = [k for k in deg if k > 0]
        self._spaces: dict = {}
        if not self.full:
            lin = multilinearize(gen)
            den = 1
            for c in lin.square.terms.values():
                den = den * c.denominator // gcd(den, c.denominator)
            self.terms = []
            for m, c in lin.square.terms.items():
                ymask = tuple(i for i, e in enumerate(m.yexp) if e)
                self.terms.append((int(c * den), frozenset(ymask)))

    def space(self, mu: tuple) -> list:
        """Echelon rows (sparse integer vectors) spanning I_mu."""
        mu = tuple(mu)
        if mu in self._spaces:
            return self._spaces[mu]
        w = _Weight.get(mu)
        n = sum(mu)
        if min(mu) < 0 or n < max(self.degree, 2):
            rows: list = []
        elif self.full:
            rows = [{i: 1} for i in range(len(w))]
        else:
            ech = Echelon()
            for var in (0, 1):
                if mu[var] == 0:
                    continue
                lower = list(mu)
                lower[var] -= 1
                sub = self.space(tuple(lower))
                if not sub:
                    continue
                for col in _shift_map(mu, var):
                    for vec in sub:
                        ech.add({col[k]: c for k, c in vec.items()})
                        if ech.rank == len(w):
                            break
            if ech.rank < len(w):
                for vec in self._evaluations(mu, w):
                    ech.add(vec)
                    if ech.rank == len(w):
                        break
            rows = ech.vectors()
        self._spaces[mu] = rows
        return rows

    def _evaluations(self, mu: tuple, w: _Weight):
        """Values of the linearization on basis elements of total weight mu."""
        # candidate elements: (weight, lam_key, rho_key)
        elems = [((1, 0), (1, 0, 0, 0), (0, 0, 1, 0)), ((0, 1), (0, 1, 0, 0), (0, 0, 0, 1))]
        nslots = self.degree
        maxdeg = sum(mu) - (nslots - 1)
        for a in range(0, mu[0] + 1):
            for b in range(0, mu[1] + 1):
                if 2 <= a + b <= maxdeg:
                    for m in weight_monomials((a, b)):
                        elems.append(((a, b), m.key, m.key))
        seen = set()
        # assign a multiset of elements to each group of symmetric slots
        groups = self.groups

        def rec(gi: int, start: int, left_in_group: int, rem: tuple, slots_left: int, chosen: list):
            if gi == len(groups):
                if rem == (0, 0):
                    yield list(chosen)
                return
            if left_in_group == 0:
                nxt = gi + 1
                if nxt == len(groups):
                    if rem == (0, 0):
                        yield list(chosen)
                    return
                yield from rec(nxt, 0, groups[nxt], rem, slots_left, chosen)
                return
            for ei in range(start, len(elems)):
                wt = elems[ei][0]
                r = (rem[0] - wt[0], rem[1] - wt[1])
                if r[0] < 0 or r[1] < 0 or r[0] + r[1] < slots_left - 1:
                    continue
                chosen.append(ei)
                yield from rec(gi, ei, left_in_group - 1, r, slots_left - 1, chosen)
                chosen.pop()

        terms = self.terms
        index = w.index
        for choice in rec(0, 0, groups[0], mu, nslots, []):
            key = tuple(choice)
            if key in seen:
                continue
            seen.add(key)
            lams = [elems[e][1] for e in choice]
            rhos = [elems[e][2] for e in choice]
            vec: dict = {}
            for c, ymask in terms:
                k = [0, 0, 0, 0]
                for t in range(nslots):
                    src = lams[t] if t in ymask else rhos[t]
                    k[0] += src[0]
                    k[1] += src[1]
                    k[2] += src[2]
                    k[3] += src[3]
                col = index[tuple(k)]
                s = vec.get(col, 0) + c
                if s:
                    vec[col] = s
                else:
                    vec.pop(col, None)
            if vec:
                yield vec


class Engine:
    """Caches generator ideals; all public queries go through an engine."""

    def __init__(self):
        self._gens: dict = {}
        self._spec_spaces: dict = {}

    def generator_ideal(self, g: GElement) -> GeneratorIdeal:
        gi = self._gens.get(g)
        if gi is None:
            gi = self._gens[g] = GeneratorIdeal(g)
        return gi

    def echelon(self, gens: Sequence[GElement], mu: tuple) -> Echelon:
        key = (frozenset(gens), tuple(mu))
        ech = self._spec_spaces.get(key)
        if ech is None:
            ech = Echelon()
            full = len(_Weight.get(tuple(mu)))
            for g in gens:
                for vec in self.generator_ideal(g).space(tuple(mu)):
                    ech.add(vec)
                    if ech.rank == full:
                        break
                if ech.rank == full:
                    break
            self._spec_spaces[key] = ech
        return ech

    def spec_echelon(self, spec: VarietySpec, mu: tuple) -> Echelon:
        return self.echelon(spec.components(), mu)

    def consequence_span(self, spec: VarietySpec, lam) -> list:
        lam = parse_partition(lam)
        lam.require_two_rows()
        mu = lam.pair()
        w = _Weight.get(mu)
        return [w.poly(v) for v in self.spec_echelon(spec, mu).vectors()]

    def ideal_dim(self, spec: VarietySpec, lam) -> int:
        lam = parse_partition(lam)
        return self.spec_echelon(spec, lam.pair()).rank

    def _hwv_drop(self, ech: Echelon, lam: Partition) -> int:
        """dim of (ideal cap ker Delta_21) at weight lam."""
        if lam.l2 == 0:
            return ech.rank
        w = _Weight.get(lam.pair())
        tgt = _Weight.get((lam.l1 + 1, lam.l2 - 1))
        images = Echelon()
        for vec in ech.vectors():
            img = raise21(w.poly(vec))
            images.add(tgt.vector(img))
        return ech.rank - images.rank

    def multiplicity(self, spec: VarietySpec, lam) -> int:
        lam = parse_partition(lam)
        lam.require_two_rows()
        if lam.n == 1:
            return 0 if any(sum(c.multidegree()) == 1 for c in spec.components()) else 1
        ech = self.spec_echelon(spec, lam.pair())
        return free_multiplicity(lam) - self._hwv_drop(ech, lam)

    def ideal_hwv_part(self, spec: VarietySpec, lam) -> list:
        """Basis of the highest weight vectors lying in the ideal."""
        from .hwv import hwv_subspace

        lam = parse_partition(lam)
        return hwv_subspace(self.consequence_span(spec, lam), lam)

    def cocharacter(self, spec: VarietySpec, n: int) -> dict:
        if n < 1:
            raise ValueError("degree must be positive")
        return {lam: self.multiplicity(spec, lam) for lam in two_row_partitions(n)}

    def contains(self, spec: VarietySpec, extra: Sequence[GElement], v) -> bool:
        """Is v in the T-ideal of spec plus the extra generators?"""
        if isinstance(v, GElement):
            if v.has_linear():
                gens = spec.components() + [c for e in extra for c in _split(e)]
                return any(sum(c.multidegree()) == 1 for c in gens) or v.is_zero()
            v = v.square
        if v.d != 2:
            raise ValueError("membership is tested in rank 2")
        if v.is_zero():
            return True
        degs = v.multidegrees()
        if len(degs) != 1:
            return all(self.contains(spec, extra, _component(v, d)) for d in degs)
        mu = next(iter(degs))
        base = self.spec_echelon(spec, mu)
        w = _Weight.get(mu)
        vec = w.vector(v)
        if base.contains(vec):
            return True
        gens = [c for e in extra for c in _split(e)]
        ech = self.echelon(spec.components() + [g for g in gens if g not in spec.components()], mu)
        return ech.contains(vec)

    def implies(self, spec: VarietySpec, u: GElement, v) -> bool:
        return self.contains(spec, [u], v)

    def quotient_independent(self, spec: VarietySpec, lam, vectors: Sequence[Poly]) -> bool:
        """Are the vectors linearly independent modulo the ideal?"""
        lam = parse_partition(lam)
        ech = self.spec_echelon(spec, lam.pair()).copy()
        w = _Weight.get(lam.pair())
        for v in vectors:
            if isinstance(v, GElement):
                v = v.square
            if not ech.add(w.vector(v)):
                return False
        return True

    def quotient_spanned_by(self, spec: VarietySpec, lam, vectors: Sequence[Poly]) -> bool:
        """Do the vectors span the highest weight space of the relatively free algebra?

        True iff the vectors together with the ideal's highest weight vectors
        span all highest weight vectors of the shape, and the vectors are
        independent modulo the ideal.
        """
        lam = parse_partition(lam)
        ech = self.spec_echelon(spec, lam.pair()).copy()
        w = _Weight.get(lam.pair())
        for v in vectors:
            if isinstance(v, GElement):
                v = v.square
            if not ech.add(w.vector(v)):
                return False
        return len(vectors) == self.multiplicity(spec, lam)


def _component(p: Poly, deg) -> Poly:
    return Poly._raw(p.d, {m: c for m, c in p.terms.items() if m.multidegree() == deg})


_DEFAULT = Engine()


def default_engine() -> Engine:
    return _DEFAULT


def consequence_span(spec: VarietySpec, lam) -> list:
    return _DEFAULT.consequence_span(spec, lam)


def ideal_dim(spec: VarietySpec, lam) -> int:
    return _DEFAULT.ideal_dim(spec, lam)


def ideal_hwv_part(spec: VarietySpec, lam) -> list:
    return _DEFAULT.ideal_hwv_part(spec, lam)


def multiplicity(spec: VarietySpec, lam) -> int:
    return _DEFAULT.multiplicity(spec, lam)


def cocharacter(spec: VarietySpec, n: int) -> dict:
    return _DEFAULT.cocharacter(spec, n)


def implies(spec: VarietySpec, u: GElement, v) -> bool:
    return _DEFAULT.implies(spec, u, v)


def quotient_spanned_by(spec: VarietySpec, lam, vectors) -> bool:
    return _DEFAULT.quotient_spanned_by(spec, lam, vectors)


# independent multilinear oracle


def _oracle_cap() -> int:
    return int(os.environ.get("BICOMM_ORACLE_CAP", ORACLE_CAP))


def _linearize_masks(g: GElement) -> dict:
    """Full linearization as {ymask: coeff}, computed by expanding subsets directly."""
    deg = g.multidegree()
    labels = []
    nxt = 0
    for k in deg:
        labels.append(list(range(nxt, nxt + k)))
        nxt += k
    out: dict = {}
    for m, c in g.square.terms.items():
        partial = [(0, Fraction(c))]
        for t, labs in enumerate(labels):
            a, b = m.yexp[t], m.zexp[t]
            if a + b == 0:
                continue
            wgt = factorial(a) * factorial(b)
            nxt_partial = []
            for ys in combinations(labs, a):
                bits = 0
                for l in ys:
                    bits |= 1 << l
                for mask, cc in partial:
                    nxt_partial.append((mask | bits, cc * wgt))
            partial = nxt_partial
        for mask, cc in partial:
            out[mask] = out.get(mask, 0) + cc
    return {k: v for k, v in out.items() if v}


def _relabel(vec: dict, perm: Sequence[int]) -> dict:
    out = {}
    for mask, c in vec.items():
        new = 0
        i = 0
        while mask:
            if mask & 1:
                new |= 1 << perm[i]
            mask >>= 1
            i += 1
        out[new] = c
    return out


def _lift(vec: dict, n: int, k: int) -> list:
    """Degree n+1 consequences of a multilinear element with new label k."""
    # order-preserving embedding of labels 0..n-1 into {0..n} minus {k}
    perm = [i if i < k else i + 1 for i in range(n)]
    base = _relabel(vec, perm)
    bk = 1 << k
    out = [
        {m | bk: c for m, c in base.items()},  # x_k * f
        dict(base),  # f * x_k
    ]
    for i in perm:
        bi = 1 << i
        # x_i -> x_i x_k : y_i, z_i -> y_i z_k
        v1: dict = {}
        # x_i -> x_k x_i : y_i, z_i -> y_k z_i
        v2: dict = {}
        for m, c in base.items():
            a = m | bi
            v1[a] = v1.get(a, 0) + c
            b = (m & ~bi) | bk
            v2[b] = v2.get(b, 0) + c
        out.append({m: c for m, c in v1.items() if c})
        out.append({m: c for m, c in v2.items() if c})
    return out


def oracle_multilinear_dim(spec: VarietySpec, n: int, cap: int | None = None) -> int:
    """Dimension of the multilinear degree-n part of the T-ideal, by brute force."""
    cap = _oracle_cap() if cap is None else cap
    if n > cap:
        raise CapExceededError(f"degree {n} exceeds the oracle cap {cap}")
    if n < 1:
        raise ValueError("degree must be positive")
    comps = spec.components()
    if any(sum(c.multidegree()) == 1 for c in comps):
        return 1 if n == 1 else 2 ** n - 2
    if n == 1:
        return 0
    full = 2 ** n - 2
    basis: list = []
    for level in range(2, n + 1):
        size = 2 ** level - 2
        ech = Echelon()
        for vec in basis:
            for k in range(level):
                for new in _lift(vec, level - 1, k):
                    if new:
                        ech.add(new)
                if ech.rank == size:
                    break
            if ech.rank == size:
                break
        for g in comps:
            if sum(g.multidegree()) != level or ech.rank == size:
                continue
            lin = _linearize_masks(g)
            for perm in permutations(range(level)):
                ech.add(_relabel(lin, perm))
                if ech.rank == size:
                    break
        basis = ech.vectors()
        if len(basis) == full and level == n:
            break
    return len(basis)


def oracle_codimension(spec: VarietySpec, n: int) -> int:
    total = 1 if n == 1 else 2 ** n - 2
    return total - oracle_multilinear_dim(spec, n)


def character_codimension(table_row: dict) -> int:
    """Sum of m(lambda) * f^lambda over one degree."""
    return sum(m * hook_length_dim(lam) for lam, m in table_row.items())
