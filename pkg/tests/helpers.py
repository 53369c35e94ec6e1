"""Small constructors shared by the tests (rank-2 unless stated)."""

from fractions import Fraction

from bicomm.galgebra import GElement
from bicomm.poly import Poly


def y(i, d=2):
    return Poly.var("y", i, d)


def z(i, d=2):
    return Poly.var("z", i, d)


def s(d=2):
    return y(1, d) * z(2, d) - y(2, d) * z(1, d)


def g(p):
    return GElement.from_poly(p)


def F(*a):
    return tuple(Fraction(v) for v in a)
