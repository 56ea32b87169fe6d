import pytest

from ncgraded.errors import NonHomogeneous, ParseError
from ncgraded.freealg import Gens, parse_poly, poly_add, poly_mul
from ncgraded.scalars import Field

F = Field(13)
G = Gens(("x", "y", "z"), (1, 1, 1))


def test_parse_basic():
    f = parse_poly("x*y + y*x - z^2", G, F)
    assert f.is_homogeneous()
    assert f.homogeneous_degree() == 2
    assert len(f.terms) == 3


def test_parse_coefficients_mod_p():
    f = parse_poly("13*x", G, F)
    assert f.is_zero()
    g = parse_poly("-x", G, F)
    assert list(g.terms.values())[0] == 12


def test_parse_power_and_product():
    f = parse_poly("x^3", G, F)
    g = poly_mul(parse_poly("x", G, F), parse_poly("x^2", G, F))
    assert f.terms == g.terms


def test_noncommutative_order_matters():
    xy = parse_poly("x*y", G, F)
    yx = parse_poly("y*x", G, F)
    assert xy.terms != yx.terms
    assert poly_add(xy, yx.scale(F.p - 1)).terms  # xy - yx is not zero


def test_parse_error_position():
    with pytest.raises(ParseError):
        parse_poly("x + * y", G, F)
    with pytest.raises(ParseError):
        parse_poly("x + w", G, F)


def test_homogeneity_check():
    f = parse_poly("x + y^2", G, F)
    assert not f.is_homogeneous()


def test_weighted_degrees():
    W = Gens(("a", "b"), (1, 2))
    f = parse_poly("a^2 + b", W, F)
    assert f.is_homogeneous()
    assert f.homogeneous_degree() == 2
