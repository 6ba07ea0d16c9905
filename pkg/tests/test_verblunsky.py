import math

import numpy as np
import pytest

from popuc import (
    DecayProfile,
    DomainError,
    RegionP,
    VerblunskySequence,
    in_region_P,
    sample_region_P,
    theta_alpha,
    validate_slow_decay,
)


class TestThetaAlpha:
    def test_zero(self):
        assert theta_alpha(0.0) == 0.0

    def test_minus_half(self):
        assert theta_alpha(-0.5) == pytest.approx(math.pi / 3, abs=1e-15)

    def test_figure_scale_value(self):
        # half-gap for the last coefficient of the degree-34 portrait
        a = -((35.0) ** -0.25)
        assert theta_alpha(a) == pytest.approx(2.0 * math.asin(35.0 ** -0.25), abs=1e-15)
        assert theta_alpha(a) == pytest.approx(0.8473945886758627, abs=1e-12)

    def test_monotone_in_modulus(self):
        grid = np.linspace(0.0, 0.999, 500)
        vals = [theta_alpha(-a) for a in grid]
        assert np.all(np.diff(vals) > 0)

    def test_domain(self):
        with pytest.raises(DomainError):
            theta_alpha(1.0)
        with pytest.raises(DomainError):
            theta_alpha(-1.2)


class TestRegionP:
    def test_membership_examples(self):
        region = RegionP(-0.3)
        assert in_region_P(-0.3, region)          # alpha itself
        assert not in_region_P(0.0, region)       # Re 0 > -0.3
        assert in_region_P(-0.4 + 0.5j, region)   # |z| ~ 0.64, Re z <= -0.3

    def test_boundary_excluded(self):
        region = RegionP(-0.3)
        assert not in_region_P(-1.0, region)      # on the unit circle

    def test_parameter_domain(self):
        RegionP(-0.999)
        RegionP(-0.5 + 0.4j)
        for bad in (0.0, -1.0, 0.2, -0.5 + 0.6j):
            with pytest.raises(DomainError):
                RegionP(bad)

    def test_prefix_membership_property(self):
        # real negative increasing sequences stay inside P_{alpha_M}
        m = 10**4
        for seq in (VerblunskySequence.power_law(1, 0.25), VerblunskySequence.log_law()):
            region = RegionP(complex(seq.alpha(m)))
            assert region.contains(seq.prefix(m + 1)).all()

    def test_sampler(self, rng):
        region = RegionP(-0.3)
        pts = sample_region_P(region, 500, rng)
        assert pts.shape == (500,)
        assert region.contains(pts).all()
        assert np.abs(pts).max() <= 0.9
        again = sample_region_P(RegionP(-0.3), 500, np.random.default_rng(20240817))
        assert np.array_equal(pts, again)


class TestSequences:
    def test_power_law_formula(self):
        seq = VerblunskySequence.power_law(1, 0.25)
        ns = np.arange(50)
        assert np.array_equal(seq.prefix(50), -np.power(ns + 2.0, -0.25))

    def test_power_law_monotone_increasing(self):
        # condition (v) with f = alpha holds from the start
        seq = VerblunskySequence.power_law(1, 0.25)
        a = seq.prefix(10**4 + 1).real
        assert np.all(a[:-1] < a[1:]) and np.all(a < 0)

    def test_log_law_formula(self):
        seq = VerblunskySequence.log_law()
        assert seq.alpha(0) == pytest.approx(-1.0 / math.log(3.0), abs=1e-15)
        assert seq.alpha(97) == pytest.approx(-1.0 / math.log(100.0), abs=1e-15)

    def test_constant_and_validation(self):
        seq = VerblunskySequence.constant(-0.5)
        assert seq.alpha(7) == -0.5
        with pytest.raises(DomainError):
            VerblunskySequence.constant(1.0)

    def test_modulus_enforced_on_realization(self):
        seq = VerblunskySequence.power_law(3.0, 0.5)  # alpha_0 = -3/sqrt(2)
        with pytest.raises(DomainError):
            seq.prefix(1)

    def test_explicit_list(self):
        seq = VerblunskySequence.from_values([-0.5, 0.1j])
        assert seq.alpha(1) == 0.1j
        with pytest.raises(IndexError):
            seq.prefix(3)
        with pytest.raises(DomainError):
            VerblunskySequence.from_values([0.5, 1.5])

    def test_prefix_cache_is_readonly_and_stable(self):
        seq = VerblunskySequence.power_law(1, 0.5)
        a = seq.prefix(10)
        b = seq.prefix(20)
        assert not a.flags.writeable and not b.flags.writeable
        assert np.array_equal(b[:10], a)

    def test_parse_roundtrip(self, tmp_path):
        assert VerblunskySequence.parse("power:1,0.25").kind == "power-law"
        assert VerblunskySequence.parse("log").kind == "log-law"
        c = VerblunskySequence.parse("const:-0.4,0.2")
        assert c.alpha(3) == complex(-0.4, 0.2)
        path = tmp_path / "seq.txt"
        path.write_text("-0.5 0.0\n0.1 0.25\n")
        f = VerblunskySequence.parse(f"file:{path}")
        assert np.array_equal(f.prefix(2), np.array([-0.5, 0.1 + 0.25j]))
        with pytest.raises(DomainError):
            VerblunskySequence.parse("nonsense:1")


class TestValidateSlowDecay:
    def test_power_sequence_with_matched_profile_passes(self):
        # f(n) = -(n+2)^(-1/4) = alpha_n makes all five conditions hold
        seq = VerblunskySequence.power_law(1, 0.25)
        profile = DecayProfile.power(1, 0.25, shift=2.0)
        rep = validate_slow_decay(profile, seq, 10**6, 3, 1e-2)
        assert rep.passed
        assert rep.i_branch == 1
        assert rep.v_m0 == 1

    def test_unshifted_profile_fails_condition_v(self):
        # alpha_m = -(m+2)^(-b) exceeds f(m) = -m^(-b) for every m, so no
        # valid m0 exists; conditions (i)-(iv) still hold
        seq = VerblunskySequence.power_law(1, 0.25)
        profile = DecayProfile.power(1, 0.25)
        rep = validate_slow_decay(profile, seq, 10**5, 3, 1e-2)
        assert rep.cond_i and rep.cond_ii and rep.cond_iii and rep.cond_iv
        assert not rep.cond_v and rep.v_m0 is None

    def test_log_law_second_branch(self):
        seq = VerblunskySequence.log_law()
        profile = DecayProfile.log_law()
        rep = validate_slow_decay(profile, seq, 10**6, 3, 1e-2)
        assert rep.i_branch == 2
        assert rep.i_increasing
        # sqrt(n)/log^2(n - sqrt n + 3) ~ 5.2 at n = 10^6, below the
        # declared divergence threshold of 10
        assert rep.i_value == pytest.approx(
            math.sqrt(1e6) / math.log(1e6 - 1e3 + 3.0) ** 2, rel=1e-9
        )
        assert not rep.cond_i
        assert rep.cond_ii and rep.cond_iii and rep.cond_iv and rep.cond_v

    def test_log_law_passes_at_ten_million(self):
        seq = VerblunskySequence.log_law()
        profile = DecayProfile.log_law()
        rep = validate_slow_decay(profile, seq, 10**7, 3, 1e-2)
        assert rep.cond_i and rep.i_value > 10.0
        assert rep.passed

    def test_constant_sequence_fails_iv(self):
        seq = VerblunskySequence.constant(-0.5)
        profile = DecayProfile.power(1, 0.25)
        rep = validate_slow_decay(profile, seq, 10**3, 1, 1e-2)
        assert not rep.cond_iv
        # alpha_n/f(n) = 0.5 n^{1/4} at n = 10^3
        assert rep.iv_deviation == pytest.approx(abs(0.5 * 1e3**0.25 - 1.0), rel=1e-12)

    def test_preconditions(self):
        seq = VerblunskySequence.power_law(1, 0.25)
        profile = DecayProfile.power(1, 0.25)
        with pytest.raises(DomainError):
            validate_slow_decay(profile, seq, 99, 1, 1e-2)
        with pytest.raises(DomainError):
            validate_slow_decay(profile, seq, 1000, 0, 1e-2)

    def test_short_explicit_sequence_raises_index_error(self):
        seq = VerblunskySequence.from_values(np.full(50, -0.5))
        profile = DecayProfile.power(1, 0.25)
        with pytest.raises(IndexError):
            validate_slow_decay(profile, seq, 1000, 1, 1e-2)
