from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from coxtw.feasibility import solve_nonneg


def _check(rows, rhs, sol):
    for row, b in zip(rows, rhs):
        acc = sum((Fraction(c) * x for c, x in zip(row, sol)), Fraction(0))
        assert acc == Fraction(b)
    assert all(x >= 0 for x in sol)


def test_feasible_simple():
    rows = [[1, 1], [1, -1]]
    rhs = [2, 0]
    sol = solve_nonneg(rows, rhs)
    assert sol is not None
    _check(rows, rhs, sol)


def test_infeasible_sign():
    # x >= 0 cannot make x = -1
    assert solve_nonneg([[1]], [-1]) is None


def test_infeasible_inconsistent():
    assert solve_nonneg([[1, 1], [1, 1]], [1, 2]) is None


def test_zero_rhs_trivial():
    sol = solve_nonneg([[1, 2], [3, 4]], [0, 0])
    assert sol == [0, 0]


def test_no_rows():
    assert solve_nonneg([], []) == []


def test_fractional_solution_exact():
    # 3x = 1 forces x = 1/3 exactly
    sol = solve_nonneg([[3]], [1])
    assert sol == [Fraction(1, 3)]


def test_redundant_rows():
    rows = [[1, 1], [2, 2]]
    rhs = [1, 2]
    sol = solve_nonneg(rows, rhs)
    assert sol is not None
    _check(rows, rhs, sol)


@settings(deadline=None, derandomize=True, max_examples=60)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
                min_size=2, max_size=2),
       st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_planted_solutions_found(rows, planted):
    # rhs constructed from a nonnegative point is always feasible
    rhs = [sum(c * x for c, x in zip(row, planted)) for row in rows]
    sol = solve_nonneg(rows, rhs)
    assert sol is not None
    _check(rows, rhs, sol)
