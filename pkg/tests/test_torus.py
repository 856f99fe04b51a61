from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contact_surgery.errors import DegenerateSlopeError, DomainError, InvalidGluingError, InvalidParameterError
from contact_surgery.torus import (
    INFINITY,
    L52_K1_GLUING,
    L52_K2_GLUING,
    RP3_GLUING,
    S3_GLUING,
    GluingMap,
    NegCFE,
    Slope,
    coarse_class_count,
    complement_slope,
    dehn_twist,
    lens_gluing,
    lp1_gluing,
    neg_cfe,
    normalize_slope,
    realization_count,
    tight_count,
)


class TestSlope:
    def test_reduction(self):
        assert Slope(4, -6) == Slope(-2, 3)
        assert Slope(-3, 0) == INFINITY
        assert str(Slope(6, 3)) == "2/1"

    def test_of(self):
        assert Slope.of("inf") is INFINITY
        assert Slope.of("-5/2") == Slope(-5, 2)
        assert Slope.of(F(3, 4)).value == F(3, 4)

    def test_zero_over_zero(self):
        with pytest.raises(ValueError):
            Slope(0, 0)


class TestNegCFE:
    @pytest.mark.parametrize(
        "s, terms",
        [(F(-5, 2), (-3, -2)), (F(-5, 3), (-2, -3)), (F(-5, 4), (-2, -2, -2, -2)), (F(-7), (-7,)), (F(-1), ())],
    )
    def test_known(self, s, terms):
        assert neg_cfe(s).terms == terms

    def test_domain(self):
        with pytest.raises(DomainError):
            neg_cfe(F(-1, 2))
        with pytest.raises(DomainError):
            NegCFE((-3, -1))

    def test_counts(self):
        assert tight_count(NegCFE(())) == 1
        assert tight_count(NegCFE((-3, -2))) == 4
        assert tight_count(NegCFE((-2, -4, -2))) == 6
        assert tight_count(NegCFE((-2, -2, -2))) == 2

    def test_round_trip_all_small_fractions(self):
        for p in range(1, 201):
            for q in range(1, p + 1):
                if gcd(p, q) == 1:
                    cfe = neg_cfe(F(-p, q))
                    assert cfe.value == F(-p, q)
                    assert all(t <= -2 for t in cfe.terms)

    @given(st.lists(st.integers(-9, -2), max_size=8))
    def test_terms_round_trip(self, terms):
        assert neg_cfe(NegCFE(tuple(terms)).value).terms == tuple(terms)


def slope():
    pairs = st.tuples(st.integers(-60, 60), st.integers(-60, 60)).filter(lambda t: t != (0, 0))
    return pairs.map(lambda t: Slope(*t))


class TestDehnTwist:
    @given(slope(), st.integers(-20, 20), st.integers(-20, 20))
    def test_group_law(self, s, j, k):
        assert dehn_twist(dehn_twist(s, j), k) == dehn_twist(s, j + k)
        assert dehn_twist(s, 0) == s
        assert dehn_twist(dehn_twist(s, k), -k) == s

    @given(slope(), st.integers(-20, 20))
    def test_preserves_meridional_intersection(self, s, k):
        # the twist fixes mu, so |num| (intersection with mu) is unchanged
        assert abs(dehn_twist(s, k).num) == abs(s.num)

    @given(slope())
    def test_normalisation_unique(self, s):
        if s.num == 0:
            with pytest.raises(DegenerateSlopeError):
                normalize_slope(s)
            return
        cfe, k = normalize_slope(s)
        assert dehn_twist(s, k).value == cfe.value <= -1
        for other in range(k - 30, k + 30):
            t = dehn_twist(s, other)
            if other != k:
                assert t.is_infinite or not (t.value <= -1)


class TestGluing:
    def test_named(self):
        for g in (S3_GLUING, RP3_GLUING, L52_K1_GLUING, L52_K2_GLUING, lp1_gluing(7)):
            g.check()
        assert RP3_GLUING.order == 2 and L52_K1_GLUING.order == 5

    def test_invalid(self):
        with pytest.raises(InvalidGluingError):
            GluingMap(1, 1, 1, 1).check()
        with pytest.raises(InvalidGluingError):
            GluingMap(1, 0, 0, 1).check()
        with pytest.raises(InvalidParameterError):
            lens_gluing(4, 2)

    @pytest.mark.parametrize("p", range(2, 30))
    def test_lens_gluing(self, p):
        for q in range(1, p):
            if gcd(p, q) == 1:
                g = lens_gluing(p, q)
                assert (g.a, g.b, g.det) == (-q, p, -1)

    def test_lens_gluing_matches_named(self):
        # different lambda2 only changes the twist, never the count
        for n in range(-6, 7):
            assert realization_count(lens_gluing(2, 1), n) == realization_count(RP3_GLUING, n)
            assert realization_count(lens_gluing(5, 2), n) == realization_count(L52_K1_GLUING, n)
            assert realization_count(lens_gluing(5, 3), n) == realization_count(L52_K2_GLUING, n)

    def test_s3_slope(self):
        tb, s2 = complement_slope(S3_GLUING, 3)
        # lambda_c = 3 mu1 + lambda1 = mu2 + 3 lambda2
        assert tb == 3 and s2 == Slope(3, 1)
        with pytest.raises(DegenerateSlopeError):
            realization_count(S3_GLUING, 0)

    @pytest.mark.parametrize("n, count", [(-3, 3), (-1, 1), (1, 1), (2, 2), (9, 2)])
    def test_s3_counts(self, n, count):
        assert realization_count(S3_GLUING, n) == count

    @pytest.mark.parametrize("n, count", [(-4, 4), (-1, 1), (0, 1), (1, 3), (2, 4), (7, 4)])
    def test_rp3_counts(self, n, count):
        assert realization_count(RP3_GLUING, n) == count

    def test_rp3_n0_is_infinite_slope(self):
        _, s2 = complement_slope(RP3_GLUING, 0)
        assert s2 == INFINITY
        assert normalize_slope(s2) == (NegCFE(()), 1)

    @pytest.mark.parametrize("p", range(2, 13))
    def test_lp1_counts(self, p):
        g = lp1_gluing(p)
        assert complement_slope(g, 0)[0] == F(1, p)
        assert realization_count(g, 0) == 1
        assert realization_count(g, 1) == p + 1
        for n in range(2, 8):
            assert realization_count(g, n) == 2 * p
        for n in range(-8, 0):
            assert realization_count(g, n) == (p - 1) * -n

    def test_coarse_classes(self):
        assert coarse_class_count(5, 2) == 2
        assert coarse_class_count(5, 1) == 1
        assert coarse_class_count(5, 4) == 1
        assert coarse_class_count(8, 3) == 1
