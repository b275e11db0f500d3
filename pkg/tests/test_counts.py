import random

import pytest
import sympy

from singcount.cohomology import x_ring
from singcount.counts import (
    count,
    count_A1,
    count_A2,
    count_A2_det,
    count_A2_proj,
    count_A3,
    formula,
    integrand,
)
from singcount.polyring import Ring
from singcount.singularity import SingClass
from singcount.targets import make_generic, make_pm, make_product


def dpoly(*names):
    R = Ring.parameters(names)
    return [R.gen(n) for n in names]


def test_sing_class():
    assert [s.codim for s in SingClass] == [1, 2, 3]
    assert SingClass.parse("a2") is SingClass.A2
    with pytest.raises(ValueError):
        SingClass.parse("A4")


def test_nodal_examples():
    assert count_A1(make_pm(2, 4)).value == 27
    assert count_A1(make_product([(1, 1), (1, 1)])).value == 2
    assert str(count_A1(make_generic(2)).value) == "3*c1^2 + 2*c1*x1 + x2"


def _discriminant_degree(d: int, seed: int) -> int:
    # members of a generic pencil g + t h of binary forms of degree d that are singular
    rng = random.Random(seed)
    x, t = sympy.symbols("x t")
    g = sum(rng.randint(-9, 9) * x ** i for i in range(d + 1)) + rng.randint(1, 9) * x ** d
    h = sum(rng.randint(-9, 9) * x ** i for i in range(d + 1))
    disc = sympy.discriminant(sympy.Poly(g + t * h, x))
    return int(sympy.degree(disc, t))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_p1_nodal_matches_discriminant_degree(d):
    (dd,) = dpoly("d")
    assert count_A1(make_pm(1, "d")).value == 2 * dd - 2
    assert count_A1(make_pm(1, d)).value == _discriminant_degree(d, seed=d)


def test_cusp_examples():
    (d,) = dpoly("d")
    assert count_A2(make_pm(2, "d")).value == 12 * d ** 2 - 36 * d + 24
    d1, d2 = dpoly("d1", "d2")
    assert count_A2(make_product([(1, "d1"), (1, "d2")])).value == 24 * (d1 - 1) * (d2 - 1)
    assert count_A2(make_pm(3, 2)).value == 0
    assert count_A2_proj(make_pm(2, 3)).value == 24
    assert count_A2_proj(make_product([(1, 1), (1, 1)])).value == 0
    assert count_A2_proj(make_generic(2)).value == count_A2_det(make_generic(2)).value


def test_cusp_verify_flag_records_route_agreement():
    res = count_A2(make_pm(3, "d"), verify=True)
    assert ("route_agreement", True) in res.checks
    res = count_A2(make_pm(3, "d"), route="proj", verify=True)
    assert res.route == "A2_proj"
    assert ("route_agreement", True) in res.checks


def test_tacnode_examples():
    (d,) = dpoly("d")
    res = count_A3(make_pm(2, "d"))
    assert res.value == 50 * d ** 2 - 192 * d + 168
    assert res.passed
    # the printed general-m P^m formula disagrees at m = 2: reported, not raised
    assert any("printed P^2 formula" in n for n in res.notes)
    assert not any("printed P^2 line" in n for n in res.notes)
    assert count_A3(make_product([(1, 1), (1, 1)])).value == 0


def test_formula_examples():
    assert str(formula("A1", 2)) == "3*c1^2 + 2*c1*x1 + x2"
    assert str(formula("A1", 1)) == "2*c1 + x1"
    assert formula("A2", 2) == x_ring(2).parse("12*c1^2 + 12*c1*x1 + 2*x1^2 + 2*x2")


@pytest.mark.parametrize("m", range(1, 6))
def test_route_agreement(m):
    assert formula("A2", m) == formula("A2", m, route="proj")


@pytest.mark.parametrize("m", range(1, 7))
def test_pm_nodal_shape(m):
    (d,) = dpoly("d")
    assert count_A1(make_pm(m, "d")).value == (m + 1) * (d - 1) ** m


@pytest.mark.parametrize("route", ["A1", "A2_det", "A2_proj", "A3"])
@pytest.mark.parametrize("m", range(1, 6))
def test_integrand_homogeneous(route, m):
    p, amb = integrand(route, m)
    assert p.is_homogeneous(amb.dimension)


def test_unknown_route():
    with pytest.raises(ValueError):
        integrand("A4", 2)
    with pytest.raises(ValueError):
        count("A1", make_pm(2, 2), route="det")


def test_numeric_target_gives_constant():
    for s in SingClass:
        assert count(s, make_pm(3, 4)).value.is_constant()
