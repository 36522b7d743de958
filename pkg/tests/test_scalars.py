import random
from fractions import Fraction

import pytest

from solvir.errors import (
    DenominatorVanishesError,
    MissingAssignmentError,
    ZeroFormError,
)
from solvir.scalars import (
    ONE,
    ZERO,
    Polynomial,
    Scalar,
    mu_poly,
    normalize_form,
    parse_scalar,
    scalar_str,
)


def mu(alpha):
    return Scalar.mu_form(alpha)


def rat(p, q=1):
    return Scalar.from_rational(Fraction(p, q))


def test_linear_form_addition():
    assert mu((1, 0)) + mu((0, 1)) == Scalar(mu_poly((1, 1)))


def test_additive_inverse():
    x = mu((2, -1)) * rat(3, 7) + rat(5)
    assert (x + (-x)).is_zero()
    assert (x + (-x)).forms == ()


def test_fraction_sum_over_two_forms():
    # 1/mu1 + 1/mu2 = (mu1 + mu2) / (mu1*mu2), by hand
    x = ONE.div_form((1, 0)) + ONE.div_form((0, 1))
    expected = Scalar(mu_poly((1, 1)), ((1, 0), (0, 1)))
    assert x == expected


def test_cancellation_in_product():
    assert mu((1, 2)) * ONE.div_form((1, 2)) == ONE
    assert (ZERO * mu((1, 0))).is_zero()


def test_cubic_product_equals_expansion():
    # x*(x-1)*(x+1)/12 expands to (x^3 - x)/12 for x = mu.(2,-1)
    x = mu((2, -1))
    prod = x * (x - 1) * (x + 1) * rat(1, 12)
    direct = Scalar((mu_poly((2, -1)) ** 3 - mu_poly((2, -1))).scale(Fraction(1, 12)))
    assert prod == direct


def test_divide_by_form_examples():
    x = mu((1, 0))
    assert (x * x).div_form((1, 0)) == x
    one_over = ONE.div_form((1, 0))
    assert one_over.forms == ((1, 0),)
    # polynomial long division oracle: multiply back
    num = Scalar(mu_poly((1, 0)) * mu_poly((1, 0)) - mu_poly((0, 1)) * mu_poly((0, 1)))
    quot = num.div_form((1, 1))
    assert quot == Scalar(mu_poly((1, -1)))
    assert quot * mu((1, 1)) == num


def test_divide_by_non_primitive_form():
    x = mu((2, 0))
    assert (x * x).div_form((2, 0)) == x
    # mu.(0,-3) = -3*mu2: the stored form is the primitive lex-positive (0,1)
    s = ONE.div_form((0, -3))
    assert s.forms == ((0, 1),)
    assert s * mu((0, -3)) == ONE


def test_zero_form_rejected():
    with pytest.raises(ZeroFormError):
        ONE.div_form((0, 0))
    with pytest.raises(ZeroFormError):
        normalize_form((0, 0, 0))


def test_evaluate_examples():
    assert mu((1, 0)).evaluate({"mu1": 2, "mu2": 3}) == 2
    with pytest.raises(DenominatorVanishesError):
        ONE.div_form((1, -1)).evaluate({"mu1": 1, "mu2": 1})
    x = mu((1,))
    cubic = (x * x * x - x) * rat(1, 12)
    assert cubic.evaluate({"mu1": 2}) == Fraction(1, 2)


def test_evaluate_requires_full_assignment():
    with pytest.raises(MissingAssignmentError):
        (mu((1, 1)) + Scalar.indeterminate("a")).evaluate({"mu1": 1, "mu2": 2})


def _random_scalar(rng, n=2):
    out = rat(rng.randint(-3, 3))
    for _ in range(rng.randint(0, 2)):
        alpha = tuple(rng.randint(-2, 2) for _ in range(n))
        if any(alpha):
            out = out + mu(alpha) * rat(rng.randint(-2, 2), rng.randint(1, 3))
    if rng.random() < 0.4:
        alpha = tuple(rng.randint(-2, 2) for _ in range(n))
        if any(alpha):
            out = out.div_form(alpha)
    if rng.random() < 0.3:
        out = out * Scalar.indeterminate(rng.choice(["a", "b", "lambda", "c"]))
    return out


def test_ring_axioms_randomized():
    rng = random.Random(20824)
    for _ in range(60):
        x, y, z = (_random_scalar(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z


def test_divide_then_multiply_roundtrip():
    rng = random.Random(7)
    for _ in range(40):
        x = _random_scalar(rng)
        alpha = tuple(rng.randint(-2, 2) for _ in range(2))
        if not any(alpha):
            alpha = (1, 0)
        assert (x * mu(alpha)).div_form(alpha) == x


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(99)
    assignment = {"mu1": Fraction(3), "mu2": Fraction(7, 2),
                  "a": Fraction(1, 3), "b": Fraction(-2),
                  "lambda": Fraction(5), "c": Fraction(-1, 4)}
    trials = 0
    while trials < 30:
        x, y, z = (_random_scalar(rng) for _ in range(3))
        try:
            lhs = (x * y + z).evaluate(assignment)
            rhs = x.evaluate(assignment) * y.evaluate(assignment) + z.evaluate(assignment)
        except DenominatorVanishesError:
            continue
        assert lhs == rhs
        trials += 1


def test_substitute_restricted():
    x = (mu((1,)) ** 3 - mu((1,))) * rat(1, 12)
    assert x.substitute({"mu1": 1}).is_zero()
    s = ONE.div_form((1, 0)) * Scalar.indeterminate("lambda")
    assert s.substitute({"lambda": 0}).is_zero()
    assert s.substitute({"mu1": 2}) == Scalar.indeterminate("lambda") * rat(1, 2)


def test_canonical_string_examples():
    x = mu((1,))
    cubic = (x * x * x - x) * rat(1, 12)
    assert scalar_str(cubic) == "(mu1^3-mu1)/12"
    assert scalar_str(mu((2, -1))) == "2*mu1-mu2"
    assert scalar_str(ONE.div_form((1, 0))) == "1/mu(1,0)"
    assert scalar_str(ZERO) == "0"
    assert scalar_str(rat(-3, 4)) == "-3/4"
    s = (mu((1, 0)) + mu((0, 1))).div_form((1, 0)).div_form((0, 1)) * rat(1, 2)
    assert scalar_str(s) == "(mu1+mu2)/(2*mu(0,1)*mu(1,0))"


def test_parse_print_roundtrip_random():
    rng = random.Random(4711)
    for _ in range(80):
        x = _random_scalar(rng)
        text = scalar_str(x)
        assert parse_scalar(text) == x
        assert scalar_str(parse_scalar(text)) == text


def test_polynomial_exact_division():
    p = mu_poly((1, 1)) * mu_poly((1, -1))
    assert p.exact_div(mu_poly((1, 1))) == mu_poly((1, -1))
    assert p.exact_div(mu_poly((1, 0))) is None
    assert Polynomial().exact_div(mu_poly((1, 0))) == Polynomial()
