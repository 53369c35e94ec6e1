"""Randomized invariants, driven by hypothesis."""

from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from bicomm.galgebra import GElement, delta_i_u, delta_ij, evaluate, from_json, gmul, to_json, witness_eval
from bicomm.hwv import free_multiplicity, hwv_basis, is_hwv, m_formula, raise21, two_row_partitions
from bicomm.poly import Monomial, Poly, substitute
from bicomm.tideal import VarietySpec, character_codimension, default_engine, oracle_multilinear_dim
from bicomm.varieties import u_spec, v_spec

MANY = settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
SOME = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_nonzero = st.integers(-3, 3).filter(bool).map(Fraction)


@st.composite
def square_monomials(draw, d, max_deg=3):
    deg = draw(st.integers(2, max_deg))
    ny = draw(st.integers(1, deg - 1))
    ys, zs = [0] * d, [0] * d
    for _ in range(ny):
        ys[draw(st.integers(0, d - 1))] += 1
    for _ in range(deg - ny):
        zs[draw(st.integers(0, d - 1))] += 1
    return Monomial(tuple(ys), tuple(zs))


@st.composite
def elements(draw, d, linear=True, max_deg=3):
    lin = tuple(draw(rationals) for _ in range(d)) if linear else (0,) * d
    terms = draw(st.dictionaries(square_monomials(d, max_deg), rationals, max_size=3))
    return GElement(d, lin, Poly(d, terms))


@st.composite
def element_triples(draw, linear=True):
    d = draw(st.integers(1, 3))
    return d, [draw(elements(d, linear)) for _ in range(3)]


@st.composite
def hwv_samples(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    lam = draw(st.sampled_from(two_row_partitions(n)))
    basis = hwv_basis(lam).vectors
    cs = draw(st.lists(st.integers(-3, 3), min_size=len(basis), max_size=len(basis)).filter(any))
    p = Poly.zero(2)
    for c, b in zip(cs, basis):
        p = p + b.scale(c)
    return lam, p


coefficient_pairs = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(lambda t: t != (0, 0))


@st.composite
def builtin_specs(draw):
    kind = draw(st.sampled_from([u_spec, v_spec]))
    return kind(*draw(coefficient_pairs))


# algebra model


@MANY
@given(element_triples())
def test_bicommutativity(data):
    _, (a, b, c) = data
    assert gmul(gmul(a, b), c) == gmul(gmul(a, c), b)
    assert gmul(a, gmul(b, c)) == gmul(b, gmul(a, c))


@SOME
@given(element_triples(linear=False))
def test_square_part_is_commutative_and_associative(data):
    _, (a, b, c) = data
    assert gmul(a, b).square == a.square * b.square
    assert gmul(gmul(a, b), c) == gmul(a, gmul(b, c))
    assert gmul(a, b) == gmul(b, a)


@MANY
@given(st.integers(2, 3).flatmap(lambda d: st.tuples(st.just(d), elements(d), elements(d), st.permutations(range(1, d + 1)))))
def test_leibniz_delta_ij(data):
    d, a, b, perm = data
    i, j = perm[0], perm[1]
    assert delta_ij(gmul(a, b), i, j) == gmul(delta_ij(a, i, j), b) + gmul(a, delta_ij(b, i, j))


@MANY
@given(
    st.integers(1, 3).flatmap(
        lambda d: st.tuples(
            st.just(d), elements(d, False), elements(d, False), elements(d, False, 2), st.integers(1, d)
        )
    )
)
def test_leibniz_delta_i_u(data):
    d, a, b, u, i = data
    assert delta_i_u(gmul(a, b), i, u) == gmul(delta_i_u(a, i, u), b) + gmul(a, delta_i_u(b, i, u))


@SOME
@given(element_triples(linear=False))
def test_witness_is_multiplicative(data):
    _, (a, b, _) = data
    assert witness_eval(gmul(a, b)) == witness_eval(a) * witness_eval(b)


@SOME
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(elements(d), elements(d), st.lists(elements(2), min_size=d, max_size=d))))
def test_endomorphisms_are_homomorphisms(data):
    a, b, images = data
    assert evaluate(gmul(a, b), images) == gmul(evaluate(a, images), evaluate(b, images))


@SOME
@given(element_triples())
def test_json_round_trip(data):
    _, elems = data
    assert from_json(to_json(elems)) == elems


@SOME
@given(st.integers(1, 3).flatmap(lambda d: elements(d, False)))
def test_substitute_identity(a):
    assert substitute(a.square, {}) == a.square


# highest weight vectors


@MANY
@given(hwv_samples())
def test_hwv_kernel(data):
    lam, p = data
    assert raise21(p).is_zero()
    assert is_hwv(p)
    assert len(hwv_basis(lam).vectors) == m_formula(lam)


@SOME
@given(st.integers(2, 7).flatmap(lambda n: st.sampled_from(two_row_partitions(n))))
def test_free_multiplicity_matches_formula(lam):
    assert free_multiplicity(lam) == m_formula(lam)


# T-ideals


@MANY
@given(builtin_specs(), st.integers(3, 4).flatmap(lambda k: hwv_samples(k)), st.integers(2, 6).flatmap(lambda n: st.sampled_from(two_row_partitions(n))))
def test_monotonicity(spec, extra, lam):
    eng = default_engine()
    bigger = spec.with_generators([GElement.from_poly(extra[1])])
    assert eng.multiplicity(bigger, lam) <= eng.multiplicity(spec, lam) <= m_formula(lam)


@st.composite
def vanishing_cases(draw):
    lam, f = draw(hwv_samples(4))
    mus = [mu for n in range(2, 9) for mu in two_row_partitions(n) if mu.l2 >= lam.l1]
    return f, draw(st.sampled_from(mus))


@MANY
@given(vanishing_cases())
def test_vanishing_above_first_row(data):
    f, mu = data
    assert default_engine().multiplicity(VarietySpec((GElement.from_poly(f),)), mu) == 0


@SOME
@given(builtin_specs(), st.integers(2, 6))
def test_character_matches_oracle(spec, n):
    row = default_engine().cocharacter(spec, n)
    assert character_codimension(row) + oracle_multilinear_dim(spec, n) == 2**n - 2


@SOME
@given(builtin_specs(), st.integers(2, 4).flatmap(lambda n: st.tuples(*[st.sampled_from(two_row_partitions(k)) for k in (n, n + 1, n + 2)])), st.data())
def test_implies_is_transitive(spec, shapes, data):
    eng = default_engine()
    vs = []
    for lam in shapes:
        basis = hwv_basis(lam).vectors
        cs = data.draw(st.lists(st.integers(-2, 2), min_size=len(basis), max_size=len(basis)).filter(any))
        p = Poly.zero(2)
        for c, b in zip(cs, basis):
            p = p + b.scale(c)
        vs.append(GElement.from_poly(p))
    u, v, w = vs
    if eng.implies(spec, u, v) and eng.implies(spec, v, w):
        assert eng.implies(spec, u, w)
