"""Exact scalars: Gaussian rationals on top of sympy's ``QQ_I`` domain."""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ, QQ_I

GaussianRational = type(QQ_I(0, 0))

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I = QQ_I(0, 1)
UNITS = (ONE, -ONE, I, -I)


def gauss(re=0, im=0) -> GaussianRational:
    """Build a Gaussian rational from anything ``QQ`` accepts (ints, Fractions, 'p/q')."""
    return QQ_I(_rat(re), _rat(im))


def _rat(v):
    if isinstance(v, str):
        v = Fraction(v)
    if isinstance(v, Fraction):
        return QQ(v.numerator, v.denominator)
    return QQ(v)


def conj(z: GaussianRational) -> GaussianRational:
    return GaussianRational.new(z.x, -z.y)


def real(z: GaussianRational) -> Fraction:
    return Fraction(int(z.x.numerator), int(z.x.denominator))


def imag(z: GaussianRational) -> Fraction:
    return Fraction(int(z.y.numerator), int(z.y.denominator))


def is_real(z: GaussianRational) -> bool:
    return z.y == 0


def to_pair(z: GaussianRational) -> list[str]:
    """JSON encoding ``[re, im]`` with each part a rational string like ``"-3/2"``."""
    return [str(real(z)), str(imag(z))]


def from_pair(pair) -> GaussianRational:
    re, im = pair
    return gauss(Fraction(re), Fraction(im))


def to_complex(z: GaussianRational) -> complex:
    return complex(float(real(z)), float(imag(z)))


def fmt(z: GaussianRational) -> str:
    re, im = real(z), imag(z)
    if im == 0:
        return str(re)
    if re == 0:
        return f"{im}i"
    sign = "+" if im > 0 else "-"
    return f"{re}{sign}{abs(im)}i"
