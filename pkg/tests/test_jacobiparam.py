from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supergca.catalog import (
    build_d21_extended,
    build_osp12_extended,
    build_su111_extended,
)
from supergca.exactmath import BaseNumber, Scalar, register_param
from supergca.jacobiparam import (
    ConstraintSystem,
    MissingAssignment,
    Solutions,
    Undetermined,
    normalize,
    residual_system,
    solve_small,
    verify_assignment,
)

register_param("x")
register_param("y")
S = Scalar.parse
ONE = {"alpha": 1, "beta": 1, "gamma": 1}


@pytest.fixture(scope="module")
def d3_system():
    return residual_system(build_d21_extended().table)


def test_d3_unique_solution(d3_system):
    sols = solve_small(d3_system)
    assert isinstance(sols, Solutions)
    assert sols.solutions == [{"alpha": BaseNumber(1), "beta": BaseNumber(1), "gamma": BaseNumber(1)}]
    assert sols.verified is True


def test_d3_verify_assignment(d3_system):
    assert verify_assignment(d3_system, ONE)
    assert not verify_assignment(d3_system, {**ONE, "alpha": S("-1/2")})
    with pytest.raises(MissingAssignment):
        verify_assignment(d3_system, {"alpha": 1})


def test_swapped_su2_forces_minus_two():
    sols = solve_small(residual_system(build_d21_extended(swap_su2=True).table))
    assert isinstance(sols, Solutions) and len(sols) == 1
    assert sols.solutions[0]["alpha"] == BaseNumber(-2)


def test_osp12_beta_one():
    sols = solve_small(residual_system(build_osp12_extended().table))
    assert sols.rendered() == [{"beta": "1"}]


def test_su111_solution_is_unique():
    # the transcribed d = 2 relations fix beta = -1, gamma = 2 (see README, "Known deviations")
    sols = solve_small(residual_system(build_su111_extended().table))
    assert sols.rendered() == [{"beta": "-1", "gamma": "2"}]
    assert sols.verified is True


def test_unextended_system_is_empty():
    s = residual_system(build_d21_extended(include_extension=False).table)
    assert len(s) == 0
    assert verify_assignment(s, {})
    assert solve_small(s).solutions == [{}]


def test_quadratic_roots_in_field():
    sols = solve_small(ConstraintSystem.from_polys([S("x^2 - 2")]))
    assert sorted(v["x"].render() for v in sols.solutions) == ["-sqrt2", "sqrt2"]
    sols = solve_small(ConstraintSystem.from_polys([S("x^2 + 1")]))
    assert sorted(v["x"].render() for v in sols.solutions) == ["-i", "i"]


def test_inconsistent_and_underdetermined():
    assert solve_small(ConstraintSystem.from_polys([S("x - 1"), S("x - 2")])).solutions == []
    assert isinstance(solve_small(ConstraintSystem.from_polys([S("x*y - 1")])), Undetermined)
    assert isinstance(solve_small(ConstraintSystem.from_polys([S("x^2 - 3")])), Undetermined)


@given(st.fractions(min_value=-20, max_value=20, max_denominator=7), st.fractions(min_value=-20, max_value=20, max_denominator=7))
def test_linear_pair_solved_exactly(a, b):
    s = ConstraintSystem.from_polys([S(f"x - ({a})"), S(f"x + y - ({a + b})")])
    sols = solve_small(s)
    assert sols.solutions == [{"x": BaseNumber(a), "y": BaseNumber(b)}]
    assert verify_assignment(s, {"x": Scalar.const(a), "y": Scalar.const(b)})


@given(st.integers(1, 9), st.integers(-9, 9))
def test_normalize_is_scale_invariant(k, c):
    p = S(f"x^2 + {c}*x*y - 3")
    assert normalize(p * k) == normalize(p)
    assert normalize(p * S("i")) == normalize(p)
