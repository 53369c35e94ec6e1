from fractions import Fraction

import pytest

from bicomm.galgebra import (
    GElement,
    InvariantError,
    delta_i_u,
    delta_ij,
    evaluate,
    from_json,
    gmul,
    multilinearize,
    polarize,
    substitute_product,
    to_json,
    witness_eval,
    x,
)
from bicomm.poly import DimensionError, Monomial, Poly, multihomogeneous_component
from helpers import g, s, y, z


def test_product_of_generators():
    assert gmul(x(1, 2), x(2, 2)) == g(y(1) * z(2))


def test_right_commutativity_on_generators():
    a = gmul(gmul(x(1, 3), x(2, 3)), x(3, 3))
    b = gmul(gmul(x(1, 3), x(3, 3)), x(2, 3))
    assert a == b == g(y(1, 3) * z(2, 3) * z(3, 3))


def test_x_times_xx():
    assert gmul(x(1, 1), gmul(x(1, 1), x(1, 1))) == g(y(1, 1) ** 2 * z(1, 1))


def test_invariant_enforced():
    with pytest.raises(InvariantError):
        g(y(1) ** 2)
    with pytest.raises(DimensionError):
        GElement(2, (1,), Poly.zero(2))


def test_delta_ij_examples():
    assert delta_ij(g(s()), 2, 1).is_zero()
    assert delta_ij(g(y(1) ** 2 * z(1)), 1, 2) == g(y(1) * y(2) * z(1) * 2 + y(1) ** 2 * z(2))
    assert delta_ij(x(1, 2), 1, 2) == x(2, 2)


def test_delta_ij_consequence_of_w3():
    a1, a2 = Fraction(2), Fraction(5)
    w3 = g((y(1) * a1 + z(1) * a2) * y(1) * z(1))
    got = gmul(delta_ij(w3, 1, 2), x(1, 2)) - gmul(w3, x(2, 2)).scale(3)
    w31 = [y(1) ** j * s() * z(1) ** (2 - j) for j in range(3)]
    assert got == g(-(w31[1].scale(2 * a1) + w31[0].scale(a2)))


def test_delta_i_u_examples():
    u = g(y(1) * z(1))
    assert delta_i_u(g(y(1) ** 2 * z(1) - y(1) * z(1) ** 2), 2, u).is_zero()
    assert delta_i_u(g(s()), 2, u) == g(y(1) ** 2 * z(1) - y(1) * z(1) ** 2)


def _replace_each_occurrence(p: Poly, i: int, u: Poly) -> Poly:
    """Sum over single occurrences of y_i or z_i, each replaced by u."""
    out = Poly.zero(p.d)
    for m, c in p.terms.items():
        for kind in ("y", "z"):
            exps = list(m.yexp if kind == "y" else m.zexp)
            k = exps[i - 1]
            if not k:
                continue
            exps[i - 1] -= 1
            rest = Monomial(tuple(exps), m.zexp) if kind == "y" else Monomial(m.yexp, tuple(exps))
            out = out + Poly(p.d, {rest: c * k}) * u
    return out


def test_delta_i_u_against_occurrence_replacement():
    p = (y(1) * z(1)) ** 2
    u = y(2) * z(2)
    got = delta_i_u(g(p), 1, g(u))
    assert got.square == _replace_each_occurrence(p, 1, u)
    # four occurrence terms, pairing up into two monomials
    assert got.square == (y(1) ** 2 * z(1) + y(1) * z(1) ** 2) * y(2) * z(2) * 2
    p = s() * y(1) ** 2 + y(2) * z(1) ** 3
    assert delta_i_u(g(p), 1, g(u)).square == _replace_each_occurrence(p, 1, u)


def test_substitute_product_examples():
    w21 = g(y(1) * s())
    assert substitute_product(w21, 2, 1, 1) == g(y(1) ** 2 * z(1) * (y(1) - z(1)))
    assert substitute_product(g(s()), 2, 1, 1) == g(y(1) ** 2 * z(1) - y(1) * z(1) ** 2)
    assert substitute_product(g(y(1) * z(1)), 2, 1, 1) == g(y(1) * z(1))


def test_polarize():
    p = polarize(g(y(1) ** 2 * z(1)), 1, 2).square
    assert multihomogeneous_component(p, (2, 1)) == y(1) ** 2 * z(2) + y(1) * y(2) * z(1) * 2
    q = polarize(g(y(1) * z(1)), 1, 2).square
    assert q == y(1) * z(1) + y(1) * z(2) + y(2) * z(1) + y(2) * z(2)
    assert multihomogeneous_component(q, (1, 1)) == y(1) * z(2) + y(2) * z(1)


def test_multilinearize_small():
    assert multilinearize(g(y(1, 1) * z(1, 1))) == g(y(1) * z(2) + y(2) * z(1))
    assert multilinearize(x(1, 1)) == x(1, 1)


def test_multilinearize_cube():
    ml = multilinearize(g(y(1, 1) ** 2 * z(1, 1))).square
    assert ml.d == 3
    # y_a y_b z_c over the 3 choices of c, each with weight 2! * 1!
    assert len(ml.terms) == 3
    assert set(ml.terms.values()) == {Fraction(2)}
    assert ml == (y(1, 3) * y(2, 3) * z(3, 3) + y(1, 3) * y(3, 3) * z(2, 3) + y(2, 3) * y(3, 3) * z(1, 3)).scale(2)


def test_multilinearize_v_generator():
    b1, b2 = Fraction(3), Fraction(-2)
    w21 = g((y(1) * b1 + z(1) * b2) * s())
    Y = [None] + [y(i, 3) for i in (1, 2, 3)]
    Z = [None] + [z(i, 3) for i in (1, 2, 3)]
    want = (Y[1].scale(b1) + Z[1].scale(b2)) * (Y[2] * Z[3] - Y[3] * Z[2]) + (Y[2].scale(b1) + Z[2].scale(b2)) * (
        Y[1] * Z[3] - Y[3] * Z[1]
    )
    assert multilinearize(w21).square == want


def test_evaluate_matches_substitute_product():
    w21 = g(y(1) * s())
    assert evaluate(w21, [x(1, 2), gmul(x(1, 2), x(1, 2))]) == substitute_product(w21, 2, 1, 1)


def test_witness_eval():
    for n in range(2, 7):
        assert witness_eval(g(y(1) * z(1) ** (n - 1))) == 1
    assert witness_eval(g(s())) == 0
    assert witness_eval(g(y(1) ** 2 * z(1) - y(1) * z(1) ** 2)) == 0


def test_json_round_trip():
    a = GElement(2, (Fraction(1, 2), Fraction(0)), y(1) * s().scale(Fraction(-3, 4)))
    back = from_json(to_json([a, x(2, 2)]))
    assert back == [a, x(2, 2)]


def test_json_errors():
    with pytest.raises(ValueError):
        from_json('[{"d": 2, "square": [{"y": [1, 0]}]}]')
    with pytest.raises(InvariantError):
        from_json('[{"d": 1, "square": [{"coeff": "1", "y": [2], "z": [0]}]}]')
