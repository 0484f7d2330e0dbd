from linfield.field import RatFunc, substitute
from linfield.independence import (
    evaluated_rank_random,
    is_functionally_independent,
    jacobian,
    nullspace,
    rank,
    symbolic_rank,
)
from linfield.oracle import GenParams, random_nonconstant, random_ratfunc

from conftest import rf


def row(*srcs, n=2):
    return [rf(s, n) for s in srcs]


def test_jacobian_examples():
    J = jacobian([rf("x1 + x2"), rf("x1*x2")])
    assert [list(r) for r in J.rows] == [row("1", "1"), row("x2", "x1")]
    assert list(jacobian([RatFunc.constant(2, 3)]).rows[0]) == row("0", "0")
    assert list(jacobian([rf("x1/x2")]).rows[0]) == row("1/x2", "-x1/x2^2")
    assert J[1, 0] == rf("x2")


def test_rank_examples():
    assert rank([row("1", "1"), row("x2", "x1")]) == 2
    phi = rf("(x1^2 + x2)/(x1 - 3)")
    assert rank(jacobian([phi, phi ** 2])) == 1
    assert rank([row("0", "0"), row("0", "0")]) == 0


def test_independence_examples():
    assert is_functionally_independent([rf("x1 + x2"), rf("x1*x2")])
    psi = rf("x1*x2 + 1")
    assert not is_functionally_independent([psi, psi * psi])
    assert not is_functionally_independent([rf("x1"), rf("x2"), rf("x1 + x2")])


def test_generators_independent():
    for n in range(1, 5):
        assert is_functionally_independent([RatFunc.var(n, i) for i in range(n)])


def test_function_of_others_is_dependent(rng):
    f = rf("(x1*x2 - x1^2)/(x2 + 3)")
    for _ in range(20):
        n = rng.randint(2, 4)
        params = GenParams(n=n, max_degree=2, max_terms=3)
        Phi = [random_nonconstant(params, rng) for _ in range(2)]
        try:
            extra = substitute(f, Phi)
        except ZeroDivisionError:
            continue
        assert not is_functionally_independent(Phi + [extra])


def test_symbolic_matches_evaluation(rng):
    for _ in range(40):
        n = rng.randint(1, 4)
        params = GenParams(n=n, max_degree=2, max_terms=3)
        Phi = [random_ratfunc(params, rng) for _ in range(rng.randint(1, n))]
        J = jacobian(Phi)
        r = symbolic_rank(J)
        assert evaluated_rank_random(J, rng) <= r
        assert rank(J) == r


def test_rank_invariant_under_row_operations(rng):
    params = GenParams(n=3, max_degree=2, max_terms=3)
    for _ in range(15):
        Phi = [random_ratfunc(params, rng) for _ in range(3)]
        rows = [list(r) for r in jacobian(Phi).rows]
        r = symbolic_rank(rows)
        # a whole row scaled by one factor
        k = random_ratfunc(params, rng, nonzero=True)
        scaled = [[x * k for x in rows[0]]] + rows[1:]
        assert symbolic_rank(scaled) == r
        assert symbolic_rank(rows[::-1]) == r


def test_rank_deficient_symbolically():
    # rank 2 although every 2x2 minor of the first two columns vanishes
    rows = [row("x1", "x2", "1", n=2), row("x1^2", "x1*x2", "x1", n=2), row("1", "0", "x2", n=2)]
    assert symbolic_rank(rows) == 2
    assert rank(rows) == 2


def test_nullspace_is_orthogonal(rng):
    params = GenParams(n=3, max_degree=2, max_terms=2)
    for _ in range(15):
        Phi = [random_nonconstant(params, rng) for _ in range(2)]
        J = jacobian(Phi)
        for v in nullspace(J):
            for rw in J.rows:
                total = RatFunc.zero(3)
                for x, y in zip(rw, v):
                    total = total + x * y
                assert total == 0
