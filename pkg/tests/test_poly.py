from fractions import Fraction

import pytest

from bicomm.poly import (
    DimensionError,
    Echelon,
    Poly,
    PreconditionError,
    add,
    coordinates,
    format_rational,
    mul,
    multihomogeneous_component,
    nullspace,
    parse_rational,
    rank_of_span,
    scale,
    substitute,
)
from helpers import F, s, y, z


def test_mul_single_monomials():
    assert mul(y(1) * z(1), z(1)) == y(1) * z(1) ** 2


def test_add_inverse_is_zero():
    p = y(1) * z(1) ** 2
    assert add(p, scale(-1, p)).is_zero()


def test_square_of_s():
    assert mul(s(), s()) == y(1) ** 2 * z(2) ** 2 - y(1) * y(2) * z(1) * z(2) * 2 + y(2) ** 2 * z(1) ** 2
    assert s().render() == "y1*z2 - y2*z1"


def test_substitute_linear_change():
    got = substitute(y(1) * z(1), {"y1": y(1) + y(2), "z1": z(1) + z(2)})
    assert got == y(1) * z(1) + y(1) * z(2) + y(2) * z(1) + y(2) * z(2)


def test_substitute_product_into_s():
    p = y(1) * z(1)
    assert substitute(s(), {("y", 2): p, ("z", 2): p}) == y(1) ** 2 * z(1) - y(1) * z(1) ** 2


def test_substitute_identity_map():
    p = s() * y(1) + z(2) ** 3 * y(2)
    assert substitute(p, {}) == p
    assert substitute(p, {"y1": y(1), "z2": z(2)}) == p


def test_substitute_rejects_other_rank():
    with pytest.raises(DimensionError):
        substitute(y(1) * z(1), {"y1": Poly.var("y", 1, 3)})


def test_multihomogeneous_component():
    p = (y(1) + y(2)) ** 2 * (z(1) + z(2))
    assert multihomogeneous_component(p, (2, 1)) == y(1) ** 2 * z(2) + y(1) * y(2) * z(1) * 2
    assert multihomogeneous_component(p, (0, 3)) == y(2) ** 2 * z(2)
    assert multihomogeneous_component(y(1) * z(1), (1, 1)).is_zero()


def test_rank_of_span():
    a, b = y(1) * z(1) ** 2, y(1) ** 2 * z(1)
    assert rank_of_span([a, b, a + b]) == 2
    assert rank_of_span([]) == 0


def _combo(coeffs):
    out = Poly.zero(2)
    for j, c in enumerate(coeffs):
        out = out + (y(1) ** (j + 1) * z(1) ** (3 - j)).scale(c)
    return out


def test_rank_of_degree4_system():
    # rows are the degree-4 U consequences in the hwv basis of (4)
    a1, a2 = Fraction(1), Fraction(1)
    rows = [[a2, a1, 0], [0, a2, a1], [a2, 2 * (a1 + a2), a1]]
    polys = [_combo(r) for r in rows]
    assert rank_of_span(polys) == 3
    # at (1,-1) the third row is the sum of the first two
    rows = [[-1, 1, 0], [0, -1, 1], [-1, 0, 1]]
    polys = [_combo(r) for r in rows]
    assert rank_of_span(polys) == 2


def test_coordinates():
    basis = [y(1) ** 2 * z(1), y(1) * z(1) ** 2]
    assert tuple(coordinates(y(1) * z(1) * (y(1) - z(1)), basis)) == F(1, -1)
    assert coordinates(y(2) * z(1) ** 2, basis) is None
    with pytest.raises(PreconditionError):
        coordinates(y(1) * z(1), [y(1) * z(1), y(1) * z(1).scale(2)])


def test_rationals_round_trip():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(" -4 ") == -4
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(Fraction(5)) == "5"
    with pytest.raises(ValueError):
        parse_rational("a/b")


def test_echelon_rank_and_membership():
    e = Echelon()
    assert e.add({0: 1, 1: 2})
    assert e.add({1: 3})
    assert not e.add({0: 2, 1: 7})
    assert e.rank == 2
    assert e.contains({0: 5})
    assert not e.contains({2: 1})


def test_nullspace_dimension():
    rows = [[Fraction(1), Fraction(1), Fraction(0)], [Fraction(0), Fraction(1), Fraction(1)]]
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] + v[1] == 0 and v[1] + v[2] == 0


def test_mixed_ranks_rejected():
    with pytest.raises(DimensionError):
        y(1) + Poly.var("y", 1, 3)
