from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from slackmat import lp_solve
from slackmat.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, check_farkas, con, satisfies

fracs = st.fractions(min_value=-4, max_value=4, max_denominator=3)


class TestExamples:
    def test_bounded_maximum(self):
        out = lp_solve([1], [con([1], "<=", 1)], sense="max")
        assert out.status == OPTIMAL
        assert out.value == 1
        assert out.point == (F(1),)

    def test_infeasible_with_farkas(self):
        cs = [con([1], "<=", -1), con([1], ">=", 0)]
        out = lp_solve([0], cs, sense="max")
        assert out.status == INFEASIBLE
        assert check_farkas(cs, out.farkas)

    def test_unbounded(self):
        out = lp_solve([1], [con([1], ">=", 0)], sense="max")
        assert out.status == UNBOUNDED

    def test_equality_and_minimize(self):
        cs = [con([1, 1], "==", 2), con([1, 0], ">=", 0), con([0, 1], ">=", 0)]
        out = lp_solve([1, 0], cs, sense="min")
        assert out.status == OPTIMAL
        assert out.value == 0

    def test_degenerate_redundant_rows(self):
        cs = [
            con([1, 0], "<=", 1),
            con([1, 0], "<=", 1),
            con([2, 0], "<=", 2),
            con([0, 1], "<=", 0),
            con([0, -1], "<=", 0),
        ]
        out = lp_solve([1, 1], cs, sense="max")
        assert out.status == OPTIMAL
        assert out.value == 1


@st.composite
def random_systems(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(1, 5))
    cs = []
    for _ in range(m):
        coeffs = draw(st.lists(fracs, min_size=n, max_size=n))
        rel = draw(st.sampled_from(["<=", ">=", "=="]))
        rhs = draw(fracs)
        cs.append(con(coeffs, rel, rhs))
    obj = draw(st.lists(fracs, min_size=n, max_size=n))
    sense = draw(st.sampled_from(["max", "min"]))
    return obj, cs, sense


class TestProperties:
    @given(random_systems())
    @settings(max_examples=150, deadline=None)
    def test_outcome_is_certified(self, system):
        obj, cs, sense = system
        out = lp_solve(obj, cs, sense=sense)
        if out.status == OPTIMAL:
            assert satisfies(cs, out.point)
        elif out.status == INFEASIBLE:
            assert check_farkas(cs, out.farkas)

    @given(random_systems())
    @settings(max_examples=100, deadline=None)
    def test_optimum_dominates_feasible_origin(self, system):
        obj, cs, sense = system
        origin = tuple(F(0) for _ in obj)
        if not satisfies(cs, origin):
            return
        out = lp_solve(obj, cs, sense=sense)
        assert out.status in (OPTIMAL, UNBOUNDED)
        if out.status == OPTIMAL:
            zero_value = F(0)
            if sense == "max":
                assert out.value >= zero_value
            else:
                assert out.value <= zero_value
