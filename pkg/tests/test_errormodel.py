import itertools
from fractions import Fraction

import pytest

from eaqecc.errormodel import (
    REP_3132_CORRECTABLE,
    CorrectableSet,
    ErrorPolynomial,
    compose,
    curve,
    named_polynomials,
    perfect_t_polynomial,
    polynomial_from_set,
    pseudothreshold,
    rep_3132_discrepancy,
    rep_3132_polynomial,
    rep_3132_set_polynomial,
)

F = Fraction


class TestConstruction:
    def test_rejects_nonzero_constant(self):
        with pytest.raises(ValueError, match="vanish"):
            ErrorPolynomial((F(1, 2), F(1)))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match=r"\[0,1\]"):
            ErrorPolynomial((0, 2))  # 2p exceeds 1 on the grid

    def test_trailing_zeros_stripped(self):
        poly = ErrorPolynomial((0, 1, 0, 0))
        assert poly.coefficients == (F(0), F(1))
        assert poly.degree == 1


class TestPerfectT:
    def test_five13_coefficients(self):
        # 1 - (1-p)^5 - 5p(1-p)^4 = 10p^2 - 20p^3 + 15p^4 - 4p^5
        poly = perfect_t_polynomial(5, 1)
        assert poly.coefficients == (F(0), F(0), F(10), F(-20), F(15), F(-4))

    def test_four131_coefficients(self):
        # 1 - (1-p)^4 - 4p(1-p)^3 = 6p^2 - 8p^3 + 3p^4
        poly = perfect_t_polynomial(4, 1)
        assert poly.coefficients == (F(0), F(0), F(6), F(-8), F(3))

    def test_all_weights_correctable_is_zero(self):
        for n in (1, 3, 5):
            assert perfect_t_polynomial(n, n).coefficients == (F(0),)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            perfect_t_polynomial(4, 5)


class TestRep3132:
    def test_closed_form_coefficients(self):
        # 1 - (1-p)^3 - 3(1-p)^2 p - (2/9)(1-p)p^2 = (25/9)p^2 - (16/9)p^3
        poly = rep_3132_polynomial()
        assert poly.coefficients == (F(0), F(0), F(25, 9), F(-16, 9))

    def test_weight2_coefficient_is_two_ninths(self):
        # coefficient of p^2(1-p) in the closed form
        poly = rep_3132_polynomial()
        base = perfect_t_polynomial(3, 1)
        residual_p2 = poly.coefficients[2] - base.coefficients[2]
        assert residual_p2 == -F(2, 9)

    def test_endpoints(self):
        poly = rep_3132_polynomial()
        assert poly(F(0)) == 0
        assert poly(F(1)) == 1

    def test_enumeration_oracle_differs(self):
        from_set = rep_3132_set_polynomial()
        assert from_set.coefficients == (F(0), F(0), F(7, 3), F(-4, 3))
        diag = rep_3132_discrepancy()
        assert diag["closed_form"].coefficients != diag["enumerated"].coefficients
        assert "2/3" in diag["note"]


class TestCorrectableSet:
    def test_rep_set_has_sixteen_patterns(self):
        assert len(REP_3132_CORRECTABLE.patterns) == 16
        weights = sorted(CorrectableSet.weight(p) for p in REP_3132_CORRECTABLE.patterns)
        assert weights == [0] + [1] * 9 + [2] * 6

    def test_requires_identity(self):
        with pytest.raises(ValueError, match="identity"):
            CorrectableSet(n=2, patterns=frozenset(["XI"]))

    def test_rejects_bad_pattern(self):
        with pytest.raises(ValueError):
            CorrectableSet(n=2, patterns=frozenset(["II", "AB"]))

    def test_identity_only(self):
        poly = polynomial_from_set(CorrectableSet(n=3, patterns=frozenset(["III"])))
        # 1 - (1-p)^3 = 3p - 3p^2 + p^3
        assert poly.coefficients == (F(0), F(3), F(-3), F(1))

    def test_identity_plus_all_weight_one(self):
        patterns = {"III"} | {
            "I" * i + ch + "I" * (2 - i) for i in range(3) for ch in "XYZ"
        }
        poly = polynomial_from_set(CorrectableSet(n=3, patterns=frozenset(patterns)))
        assert poly.coefficients == perfect_t_polynomial(3, 1).coefficients


class TestOracleEquality:
    @pytest.mark.parametrize("n,t", [(n, t) for n in range(1, 6) for t in range(0, 3) if t <= n])
    def test_perfect_t_matches_enumeration(self, n, t):
        patterns = frozenset(
            "".join(word)
            for word in itertools.product("IXYZ", repeat=n)
            if sum(ch != "I" for ch in word) <= t
        )
        enumerated = polynomial_from_set(CorrectableSet(n=n, patterns=patterns))
        assert enumerated.coefficients == perfect_t_polynomial(n, t).coefficients


class TestCompose:
    def test_identity_left(self):
        identity = ErrorPolynomial((0, 1), label="id")
        f = rep_3132_polynomial()
        assert compose(identity, f).coefficients == f.coefficients

    def test_identity_right(self):
        identity = ErrorPolynomial((0, 1), label="id")
        f = perfect_t_polynomial(5, 1)
        assert compose(f, identity).coefficients == f.coefficients

    def test_degree_multiplies(self):
        f = perfect_t_polynomial(5, 1)
        g = rep_3132_polynomial()
        assert compose(f, g).degree == f.degree * g.degree

    def test_associative(self):
        polys = named_polynomials()
        f, g, h = polys["five13"], polys["four131"], polys["rep3132"]
        left = compose(f, compose(g, h))
        right = compose(compose(f, g), h)
        assert left.coefficients == right.coefficients

    def test_exact_evaluation_agrees_with_nesting(self):
        f = perfect_t_polynomial(5, 1)
        g = rep_3132_polynomial()
        fg = compose(f, g)
        for p in (F(1, 7), F(2, 5), F(9, 10)):
            assert fg(p) == f(g(p))


class TestPseudothreshold:
    def test_component_fixed_points(self):
        polys = named_polynomials()
        assert pseudothreshold(polys["five13"]) == pytest.approx(0.1311231, abs=1e-6)
        assert pseudothreshold(polys["four131"]) == pytest.approx(0.2324081, abs=1e-6)

    def test_rep3132_has_no_crossing_below_half(self):
        # its only nonzero fixed points are 0.5625 and 1
        assert pseudothreshold(rep_3132_polynomial()) is None

    def test_composed_values(self):
        polys = named_polynomials()
        cases = {
            ("five13", "rep3132"): 0.321847,
            ("rep3132", "five13"): 0.228469,
            ("five13", "four131"): 0.187705,
            ("four131", "five13"): 0.162215,
        }
        for (outer, inner), expected in cases.items():
            value = pseudothreshold(compose(polys[outer], polys[inner]))
            assert value == pytest.approx(expected, abs=5e-6)

    def test_exact_sign_change_at_reported_root(self):
        # independent rational check: g = f(p) - p flips sign across p*
        polys = named_polynomials()
        f = compose(polys["rep3132"], polys["five13"])
        tol = 1e-9
        p_star = pseudothreshold(f, tol=tol)
        lo = F(p_star) - 2 * F(str(tol))
        hi = F(p_star) + 2 * F(str(tol))
        assert f(lo) - lo < 0
        assert f(hi) - hi > 0

    def test_self_composition_preserves_threshold(self):
        polys = named_polynomials()
        for name in ("five13", "four131", "rep3132"):
            f = polys[name]
            base = pseudothreshold(f)
            doubled = pseudothreshold(compose(f, f))
            if base is None:
                assert doubled is None
            else:
                assert doubled == pytest.approx(base, abs=1e-6)

    def test_rejects_nonpositive_tolerance(self):
        with pytest.raises(ValueError, match="tol"):
            pseudothreshold(ErrorPolynomial((0, 1)), tol=-1)

    def test_tolerance_refinement_stable_at_report_precision(self):
        polys = named_polynomials()
        f = compose(polys["five13"], polys["four131"])
        coarse = pseudothreshold(f, tol=1e-6)
        fine = pseudothreshold(f, tol=1e-12)
        assert round(coarse, 4) == round(fine, 4)

    def test_monotone_on_half_interval(self):
        for poly in named_polynomials().values():
            values = [poly(F(i, 1000)) for i in range(0, 501)]
            assert all(a <= b for a, b in zip(values, values[1:]))


class TestCurve:
    def test_five13_midpoint(self):
        points = dict(curve(perfect_t_polynomial(5, 1), 0, 1, 3))
        assert points[F(1, 2)] == F(13, 16)  # 0.8125

    def test_endpoints(self):
        points = curve(rep_3132_polynomial(), 0, 1, 5)
        assert points[0] == (0, 0)
        assert points[-1] == (1, 1)

    def test_uniform_spacing(self):
        points = curve(rep_3132_polynomial(), "0.1", "0.4", 4)
        gaps = {b[0] - a[0] for a, b in zip(points, points[1:])}
        assert gaps == {F(1, 10)}

    def test_validation(self):
        poly = rep_3132_polynomial()
        with pytest.raises(ValueError):
            curve(poly, "0.5", "0.5", 10)
        with pytest.raises(ValueError):
            curve(poly, 0, 1, 1)
