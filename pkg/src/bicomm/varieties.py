"""The two one-parameter families of subvarieties and their closed-form data.

U_alpha is defined by alpha1 x(xx) + alpha2 (xx)x = 0 and V_beta by
beta1 x[x,y] + beta2 [x,y]x = 0.  This module classifies the parameters,
returns the known cocharacters and surviving highest weight vectors, and
rebuilds the degree-4 consequence tables from the raw generators.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Callable, NamedTuple

from .galgebra import (
    GElement,
    delta_i_u,
    delta_ij,
    evaluate,
    gmul,
    multilinearize,
    substitute_product,
    x,
)
from .hwv import Partition, two_row_partitions
from .poly import Poly, parse_rational
from .tideal import VarietySpec

__all__ = [
    "AlphaCase",
    "BetaCase",
    "REPRESENTATIVES",
    "classify_alpha",
    "classify_beta",
    "u_generator",
    "v_generator",
    "u_spec",
    "v_spec",
    "b_spec",
    "builtin_spec",
    "expected_cocharacter_U",
    "expected_cocharacter_V",
    "expected_survivors_U",
    "expected_survivors_V",
    "ConsequenceEntry",
    "reference_consequence_table",
    "w",
]


class AlphaCase(Enum):
    GENERIC = "Generic"
    ALPHA2_ZERO = "Alpha2Zero"
    ALPHA1_ZERO = "Alpha1Zero"
    SUM_ZERO = "SumZero"
    DIFF_ZERO = "DiffZero"


class BetaCase(Enum):
    GENERIC = "Generic"
    BETA2_ZERO = "Beta2Zero"
    BETA1_ZERO = "Beta1Zero"
    SUM_ZERO = "SumZero"
    DIFF_ZERO = "DiffZero"


# smallest integer witness of each case, shared by both families
REPRESENTATIVES = {
    "Generic": (1, 2),
    "Alpha2Zero": (1, 0),
    "Alpha1Zero": (0, 1),
    "Beta2Zero": (1, 0),
    "Beta1Zero": (0, 1),
    "SumZero": (1, -1),
    "DiffZero": (1, 1),
}


def _classify(c1, c2, names) -> str:
    c1, c2 = parse_rational(c1), parse_rational(c2)
    if c1 == 0 and c2 == 0:
        raise ValueError("coefficient pair must be nonzero")
    if c1 * c2 * (c1 + c2) * (c1 - c2) != 0:
        return names[0]
    if c2 == 0:
        return names[1]
    if c1 == 0:
        return names[2]
    if c1 + c2 == 0:
        return names[3]
    return names[4]


def classify_alpha(a1, a2) -> AlphaCase:
    return AlphaCase(_classify(a1, a2, [c.value for c in AlphaCase]))


def classify_beta(b1, b2) -> BetaCase:
    return BetaCase(_classify(b1, b2, [c.value for c in BetaCase]))


def _y(i):
    return Poly.var("y", i, 2)


def _z(i):
    return Poly.var("z", i, 2)


def _s():
    return _y(1) * _z(2) - _y(2) * _z(1)


def w(lam, j: int) -> Poly:
    """The basis highest weight vector w_lam^(j)."""
    lam = Partition.of(lam) if not isinstance(lam, Partition) else lam
    l1, l2 = lam.l1, lam.l2
    if l2 == 0:
        if not 1 <= j <= l1 - 1:
            raise ValueError(f"j={j} out of range for {lam}")
    elif not 0 <= j <= l1 - l2:
        raise ValueError(f"j={j} out of range for {lam}")
    return _y(1) ** j * _s() ** l2 * _z(1) ** (l1 - l2 - j)


def u_generator(a1, a2) -> GElement:
    a1, a2 = parse_rational(a1), parse_rational(a2)
    return GElement.from_poly((_y(1) * a1 + _z(1) * a2) * _y(1) * _z(1))


def v_generator(b1, b2) -> GElement:
    b1, b2 = parse_rational(b1), parse_rational(b2)
    return GElement.from_poly((_y(1) * b1 + _z(1) * b2) * _s())


def u_spec(a1, a2) -> VarietySpec:
    return VarietySpec((u_generator(a1, a2),), f"U({a1},{a2})")


def v_spec(b1, b2) -> VarietySpec:
    return VarietySpec((v_generator(b1, b2),), f"V({b1},{b2})")


def b_spec() -> VarietySpec:
    return VarietySpec((), "B")


def builtin_spec(name: str, coeffs=None) -> VarietySpec:
    if name == "b":
        return b_spec()
    if coeffs is None:
        raise ValueError(f"variety {name!r} needs a coefficient pair")
    if name == "u":
        return u_spec(*coeffs)
    if name == "v":
        return v_spec(*coeffs)
    raise ValueError(f"unknown builtin variety {name!r}")


def _row(n: int, nonzero: dict) -> dict:
    row = {lam: 0 for lam in two_row_partitions(n)}
    for shape, m in nonzero.items():
        row[Partition.of(shape)] = m
    return row


def _low_degree_U(n: int) -> dict:
    return {1: {(1,): 1}, 2: {(2,): 1, (1, 1): 1}, 3: {(3,): 1, (2, 1): 2}}[n]


def _low_degree_V(n: int) -> dict:
    return {1: {(1,): 1}, 2: {(2,): 1, (1, 1): 1}, 3: {(3,): 2, (2, 1): 1}}[n]


def expected_cocharacter_U(case: AlphaCase, n: int) -> dict:
    case = AlphaCase(case)
    if n < 1:
        raise ValueError("degree must be positive")
    if n <= 3:
        return _row(n, _low_degree_U(n))
    if case is AlphaCase.GENERIC:
        return _row(n, {})
    if case in (AlphaCase.ALPHA2_ZERO, AlphaCase.ALPHA1_ZERO):
        return _row(n, {(n,): 1, (n - 1, 1): 1})
    if case is AlphaCase.SUM_ZERO:
        return _row(n, {(4,): 1, (2, 2): 1} if n == 4 else {(n,): 1})
    return _row(n, {(3, 1): 1} if n == 4 else {})


def expected_cocharacter_V(case: BetaCase, n: int) -> dict:
    case = BetaCase(case)
    if n < 1:
        raise ValueError("degree must be positive")
    if n <= 3:
        return _row(n, _low_degree_V(n))
    if case in (BetaCase.GENERIC, BetaCase.DIFF_ZERO):
        return _row(n, {(4,): 2} if n == 4 else {(n,): 1})
    return _row(n, {(n,): 2, (n - 1, 1): 1})


def expected_survivors_U(case: AlphaCase, n: int) -> dict:
    """Highest weight vectors generating the surviving modules, for n >= 4."""
    case = AlphaCase(case)
    if n < 4:
        raise ValueError("survivor data is tabulated from degree 4 on")
    if case is AlphaCase.GENERIC:
        return {}
    if case is AlphaCase.ALPHA2_ZERO:
        return {Partition.of(n): [w((n,), 1)], Partition.of(n - 1, 1): [w((n - 1, 1), 0)]}
    if case is AlphaCase.ALPHA1_ZERO:
        return {Partition.of(n): [w((n,), n - 1)], Partition.of(n - 1, 1): [w((n - 1, 1), n - 2)]}
    if case is AlphaCase.SUM_ZERO:
        out = {Partition.of(n): [w((n,), 1)]}
        if n == 4:
            out[Partition.of(2, 2)] = [w((2, 2), 0)]
        return out
    return {Partition.of(3, 1): [w((3, 1), 2)]} if n == 4 else {}


def expected_survivors_V(case: BetaCase, n: int) -> dict:
    case = BetaCase(case)
    if n < 4:
        raise ValueError("survivor data is tabulated from degree 4 on")
    top, hook = Partition.of(n), Partition.of(n - 1, 1)
    if case is BetaCase.GENERIC:
        return {top: [w((n,), n - 1), w((n,), n - 2)] if n == 4 else [w((n,), n - 1)]}
    if case is BetaCase.DIFF_ZERO:
        return {top: [w((n,), 1), w((n,), 2)] if n == 4 else [w((n,), n - 1)]}
    if case is BetaCase.BETA2_ZERO:
        return {top: [w((n,), 1), w((n,), 2)], hook: [w((n - 1, 1), 0)]}
    # Beta1Zero is the mirror image of Beta2Zero; SumZero has the same survivors
    return {top: [w((n,), n - 2), w((n,), n - 1)], hook: [w((n - 1, 1), n - 2)]}


# degree-4 consequence tables


class ConsequenceEntry(NamedTuple):
    name: str
    partition: Partition
    coords: Callable  # (c1, c2) -> tuple of Fractions in hwv basis order
    build: Callable  # (c1, c2) -> GElement rebuilt from the generator


def _g(p: Poly) -> GElement:
    return GElement.from_poly(p)


def _x3(i: int) -> GElement:
    return x(i, 3)


def _u_table() -> list:
    X1, X2 = x(1, 2), x(2, 2)

    def w3(a1, a2):
        return u_generator(a1, a2)

    def w3_in_x2(a1, a2):
        a1, a2 = parse_rational(a1), parse_rational(a2)
        return _g((_y(2) * a1 + _z(2) * a2) * _y(2) * _z(2))

    def h3(a1, a2):
        # complete linearization of the one-variable generator
        a1, a2 = parse_rational(a1), parse_rational(a2)
        return multilinearize(GElement(1, (0,), Poly(1, {((2,), (1,)): a1, ((1,), (2,)): a2})))

    def v3_31(a1, a2):
        return delta_i_u(w3(a1, a2), 1, _g(_y(1) * _z(2) + _y(2) * _z(1))) - evaluate(
            h3(a1, a2), [X1, X2, _g(_y(1) * _z(1))]
        )

    def v1_22(a1, a2):
        return (
            delta_i_u(w3(a1, a2), 1, _g(_y(2) * _z(2)))
            + delta_i_u(w3_in_x2(a1, a2), 2, _g(_y(1) * _z(1)))
            - evaluate(h3(a1, a2), [X1, X2, _g(_y(1) * _z(2) + _y(2) * _z(1))]).scale(Fraction(1, 2))
        )

    F = Fraction
    P4, P31, P22 = Partition.of(4), Partition.of(3, 1), Partition.of(2, 2)
    return [
        ConsequenceEntry("v1_(4)", P4, lambda a1, a2: (F(a2), F(a1), F(0)),
                   lambda a1, a2: gmul(w3(a1, a2), X1)),
        ConsequenceEntry("v1_(3,1)", P31, lambda a1, a2: (-F(a2), -2 * F(a1), F(0)),
                   lambda a1, a2: gmul(delta_ij(w3(a1, a2), 1, 2), X1) - gmul(w3(a1, a2), X2).scale(3)),
        ConsequenceEntry("v2_(4)", P4, lambda a1, a2: (F(0), F(a2), F(a1)),
                   lambda a1, a2: gmul(X1, w3(a1, a2))),
        ConsequenceEntry("v2_(3,1)", P31, lambda a1, a2: (F(0), 2 * F(a2), F(a1)),
                   lambda a1, a2: gmul(X1, delta_ij(w3(a1, a2), 1, 2)) - gmul(X2, w3(a1, a2)).scale(3)),
        ConsequenceEntry("v3_(4)", P4, lambda a1, a2: (F(a2), 2 * (F(a1) + F(a2)), F(a1)),
                   lambda a1, a2: delta_i_u(w3(a1, a2), 1, _g(_y(1) * _z(1)))),
        ConsequenceEntry("v3_(3,1)", P31, lambda a1, a2: (-F(a2), F(0), F(a1)), v3_31),
        ConsequenceEntry("v1_(2,2)", P22, lambda a1, a2: (-(F(a1) + F(a2)),), v1_22),
        ConsequenceEntry("v4_(3,1)", P31, lambda a1, a2: (F(a2), 2 * (F(a1) + F(a2)), F(a1)),
                   lambda a1, a2: delta_i_u(w3(a1, a2), 1, _g(_s()))),
    ]


def _v_table() -> list:
    X1, X2 = x(1, 2), x(2, 2)
    F = Fraction

    def w21(b1, b2):
        return v_generator(b1, b2)

    def p(b1, b2):
        return multilinearize(w21(b1, b2))

    def p_antisym(b1, b2):
        # generator of the sign component in the first two slots
        q = p(b1, b2)
        swapped = evaluate(q, [_x3(1), _x3(3), _x3(2)])
        return (q + swapped.scale(2)).scale(F(1, 3))

    def t3(b1, b2):
        # the sign of the second summand is forced by the highest weight condition
        return evaluate(p(b1, b2), [X1, X1, _g(_y(1) * _z(2) + _y(2) * _z(1))]).scale(F(1, 2)) - evaluate(
            p(b1, b2), [X1, X2, _g(_y(1) * _z(1))]
        )

    def t4(b1, b2):
        return evaluate(p_antisym(b1, b2), [X1, X2, _g(_y(1) * _z(1))])

    def t5(b1, b2):
        return evaluate(p(b1, b2), [X1, X1, _g(_s())]).scale(F(1, 2))

    P4, P31 = Partition.of(4), Partition.of(3, 1)
    return [
        ConsequenceEntry("t1_(3,1)", P31, lambda b1, b2: (F(b2), F(b1), F(0)),
                   lambda b1, b2: gmul(w21(b1, b2), X1)),
        ConsequenceEntry("t2_(3,1)", P31, lambda b1, b2: (F(0), F(b2), F(b1)),
                   lambda b1, b2: gmul(X1, w21(b1, b2))),
        ConsequenceEntry("t4_(4)", P4, lambda b1, b2: (-F(b2), -(F(b1) - F(b2)), F(b1)),
                   lambda b1, b2: substitute_product(w21(b1, b2), 2, 1, 1)),
        ConsequenceEntry("t3_(3,1)", P31, lambda b1, b2: (F(b2), F(0), F(b1)), t3),
        ConsequenceEntry("t4_(3,1)", P31, lambda b1, b2: (F(0), F(b1) + F(b2), F(0)), t4),
        ConsequenceEntry("t5_(3,1)", P31, lambda b1, b2: (-F(b2), -(F(b1) - F(b2)), F(b1)), t5),
    ]


def reference_consequence_table(which: str) -> list:
    which = which.upper()
    if which == "U":
        return _u_table()
    if which == "V":
        return _v_table()
    raise ValueError(f"unknown table {which!r}")
