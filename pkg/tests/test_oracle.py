import pytest

from linfield.errors import PoleError
from linfield.field import RatFunc
from linfield.oracle import (
    GenParams,
    homogeneous_element,
    identity_check,
    random_ratfunc,
)
from linfield.derivations import apply_derivation
from linfield.oracle import euler_vector

from conftest import rf


def test_degree_zero_gives_scalar():
    for seed in range(20):
        assert random_ratfunc(GenParams(n=3, max_degree=0, seed=seed)).is_constant()


def test_same_seed_same_output():
    p = GenParams(n=3, max_degree=3, max_terms=4, seed=77)
    assert random_ratfunc(p) == random_ratfunc(p)
    assert str(random_ratfunc(p)) == str(random_ratfunc(p))


def test_snapshot():
    f = random_ratfunc(GenParams(n=2, max_degree=2, seed=12345))
    assert str(f) == "(-4*x1*x2 - 3) / (x1^2 - 9*x1*x2)"


def test_degree_bounds(rng):
    for _ in range(50):
        p = GenParams(n=rng.randint(1, 4), max_degree=rng.randint(0, 4), seed=rng.randrange(1 << 62))
        f = random_ratfunc(p)
        assert f.num.degree() <= p.max_degree and f.den.degree() <= p.max_degree


def test_identity_examples():
    f = rf("(x1 + 1)/(x2 - 3)")
    assert identity_check(f, f)
    assert identity_check(rf("x1^2 - x2^2"), rf("(x1 - x2)*(x1 + x2)"))
    assert not identity_check(rf("x1"), rf("x2"), trials=1)


def test_equal_forms_pass_for_all_seeds():
    a, b = rf("x1/x2 + 1"), rf("(x1 + x2)/x2")
    assert a == b
    assert all(identity_check(a, b, trials=3, seed=s) for s in range(30))


def test_distinct_forms_fail(rng):
    params = GenParams(n=3, max_degree=4, max_terms=3)
    checked = 0
    while checked < 100:
        a, b = random_ratfunc(params, rng), random_ratfunc(params, rng)
        if a == b:
            continue
        assert not identity_check(a, b, trials=5, seed=checked)
        checked += 1


def test_pole_everywhere_fails_loudly():
    class AlwaysPole(RatFunc):
        __slots__ = ()

        def evaluate(self, point):
            raise PoleError("pole")

    f = rf("x1")
    bad = AlwaysPole._make(2, 1, f.N, f.D)
    with pytest.raises(PoleError):
        identity_check(bad, f)


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        identity_check(rf("x1"), rf("x1"), trials=0)


def test_homogeneous_element_degree(rng):
    for d in (-2, -1, 0, 1, 3):
        for n in (2, 3):
            h = homogeneous_element(n, d, rng)
            assert apply_derivation(euler_vector(n), h) == h * d
