import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from popuc import (
    DomainError,
    PatternError,
    PreconditionError,
    VerblunskySequence,
    apply,
    build_cmv,
    dense,
    eigenvalue_ball,
    gamma_n,
    m_minus_l,
    paraorthogonal,
    polynomials_upto,
    popuc_zeros,
    residual,
    resolvent_gap_check,
    sign_pattern_invertibility,
    trial_nu,
    trial_upsilon,
    write_dense_csv,
)


class TestBuild:
    def test_two_by_two_hand_case(self):
        op = build_cmv(VerblunskySequence.from_values([-0.5]), 2, -1.0)
        rho = math.sqrt(1 - 0.25)
        assert np.allclose(dense(op), [[-0.5, -rho], [rho, -0.5]], atol=1e-15)
        # characteristic polynomial z^2 - 2 a z + 1
        assert np.allclose(np.poly(dense(op)), [1.0, 1.0, 1.0], atol=1e-12)

    def test_free_case_eigenangles(self):
        n = 8
        op = build_cmv(VerblunskySequence.constant(0.0), n, -1.0)
        angles = np.sort(np.angle(np.linalg.eigvals(dense(op))) % (2 * np.pi))
        assert np.allclose(angles, np.pi * (2 * np.arange(1, n + 1) - 1) / n, atol=1e-12)

    def test_char_poly_matches_paraorthogonal(self, rng):
        for n in (2, 5, 9, 16):
            alphas = 0.7 * (rng.uniform(-1, 1, n - 1) + 1j * rng.uniform(-1, 1, n - 1))
            beta = np.exp(1j * rng.uniform(0, 2 * np.pi))
            seq = VerblunskySequence.from_values(alphas)
            op = build_cmv(seq, n, beta)
            want = paraorthogonal(polynomials_upto(seq, n - 1), beta)[::-1]
            assert np.abs(np.poly(dense(op)) - want).max() < 1e-12

    def test_eigenangles_match_phase_finder(self):
        seq = VerblunskySequence.power_law(1, 0.25)
        op = build_cmv(seq, 34, -1.0)
        angles = np.sort(np.angle(np.linalg.eigvals(dense(op))) % (2 * np.pi))
        zs = popuc_zeros(seq, 34, -1.0)
        assert np.abs(angles - zs.args).max() < 1e-9

    def test_unitarity_dense(self):
        for n in (33, 500):
            op = build_cmv(VerblunskySequence.power_law(1, 0.25), n, -1.0)
            c = dense(op)
            assert np.abs(c @ c.conj().T - np.eye(n)).max() <= 1e-10

    def test_unitarity_matvec_large(self, rng):
        n = 10**5
        op = build_cmv(VerblunskySequence.log_law(), n, -1.0)
        v = rng.normal(size=n) + 1j * rng.normal(size=n)
        assert abs(np.linalg.norm(apply(op, v)) - np.linalg.norm(v)) <= 1e-10 * np.linalg.norm(v)

    def test_pentadiagonal(self):
        op = build_cmv(VerblunskySequence.log_law(), 12, -1.0)
        c = dense(op)
        i, j = np.indices(c.shape)
        assert np.all(c[np.abs(i - j) > 2] == 0)

    def test_factor_unitarity_by_parity(self):
        # the leftover 1x1 block lands in L for odd n, in M for even n
        for n, which in ((6, "L"), (7, "M")):
            op = build_cmv(VerblunskySequence.power_law(1, 0.5), n, -1.0)
            tri = np.diag(op.l_diag) + np.diag(op.l_off, 1) + np.diag(op.l_off, -1)
            trj = np.diag(op.m_diag) + np.diag(op.m_off, 1) + np.diag(op.m_off, -1)
            lu = np.abs(tri @ tri.conj().T - np.eye(n)).max()
            mu = np.abs(trj @ trj.conj().T - np.eye(n)).max()
            if which == "L":
                assert mu < 1e-14
            else:
                assert lu < 1e-14
            assert max(lu, mu) < 1e-14  # both are unitary once the block decouples

    def test_domain(self):
        seq = VerblunskySequence.constant(0.0)
        with pytest.raises(DomainError):
            build_cmv(seq, 4, 0.5)
        with pytest.raises(DomainError):
            build_cmv(seq, 0, -1.0)


class TestApply:
    def test_columns(self):
        op = build_cmv(VerblunskySequence.constant(0.0), 6, -1.0)
        c = dense(op)
        for k in range(6):
            e = np.zeros(6, dtype=complex)
            e[k] = 1.0
            assert np.allclose(apply(op, e), c[:, k], atol=1e-15)

    def test_two_by_two_action(self):
        op = build_cmv(VerblunskySequence.from_values([-0.5]), 2, -1.0)
        out = apply(op, np.array([1.0, 0.0], dtype=complex))
        assert np.allclose(out, [-0.5, math.sqrt(0.75)], atol=1e-15)

    def test_dimension_mismatch(self):
        op = build_cmv(VerblunskySequence.constant(0.0), 6, -1.0)
        with pytest.raises(DomainError):
            apply(op, np.ones(5, dtype=complex))


class TestTrialVectors:
    def test_nu_norm_exact(self):
        assert np.linalg.norm(trial_nu(10, 0).entries) ** 2 == pytest.approx(3333.0, abs=1e-9)

    def test_nu_single_entry(self):
        v = trial_nu(10, 8)
        nz = np.nonzero(v.entries)[0]
        assert nz.tolist() == [8]          # 1-based j = 9
        assert v.entries[8] == 1j          # odd j carries the imaginary unit
        assert np.linalg.norm(v.entries) == 1.0

    def test_nu_parity_pattern(self):
        v = trial_nu(12, 3).entries
        j = np.arange(1, 13)
        inside = (j > 3) & (j < 12)
        assert np.all(v[~inside & (j > 0)] == 0)
        assert np.all(v[inside & (j % 2 == 0)].imag == 0)
        assert np.all(v[inside & (j % 2 == 1)].real == 0)

    def test_nu_norm_asymptotic_shape(self):
        n, b = 10**4, 0.25
        v = trial_nu(n, gamma_n(n, b))
        ratio = np.linalg.norm(v.entries) ** 2 / (n ** (2.5 * (1 + b)) / 30.0)
        assert abs(ratio - 1.0) < 0.05

    def test_nu_domain(self):
        with pytest.raises(DomainError):
            trial_nu(10, 9)
        with pytest.raises(DomainError):
            trial_nu(10, -1)

    def test_upsilon_structure(self):
        v = trial_upsilon(100)
        nz = np.nonzero(v.entries)[0]
        assert nz.tolist() == list(range(90, 99))  # 1-based 91..99
        assert np.linalg.norm(v.entries) == pytest.approx(1.0, abs=1e-12)
        w = trial_upsilon(10**4)
        assert np.count_nonzero(w.entries) == 99
        with pytest.raises(DomainError):
            trial_upsilon(3)

    def test_disjoint_supports_are_orthogonal(self):
        a = np.zeros(100, dtype=complex)
        a[:50] = trial_nu(50, 40).entries
        b = trial_nu(100, 60).entries
        assert np.vdot(a, b) == 0.0


class TestResidual:
    def test_exact_eigenvector(self):
        op = build_cmv(VerblunskySequence.constant(0.0), 8, -1.0)
        vals, vecs = np.linalg.eig(dense(op))
        k = np.argmin(np.abs(np.angle(vals)))
        r = residual(op, vecs[:, k])
        assert r == pytest.approx(abs(vals[k] - 1.0), abs=1e-12)

    def test_zero_vector(self):
        op = build_cmv(VerblunskySequence.constant(0.0), 8, -1.0)
        with pytest.raises(DomainError):
            residual(op, np.zeros(8, dtype=complex))

    def test_scaling_trend_and_large_n_bound(self):
        # residual * n^b decreases toward 2C; the 2.2C envelope holds at
        # n = 10^5 for b in {1/4, 1/2} (larger b converges more slowly)
        for b, check_bound in ((0.25, True), (0.5, True), (0.75, False)):
            seq = VerblunskySequence.power_law(1, b)
            scaled = []
            for n in (10**3, 10**4, 10**5):
                op = build_cmv(seq, n, -1.0)
                scaled.append(residual(op, trial_nu(n, gamma_n(n, b))) * n**b)
            assert scaled[0] > scaled[1] > scaled[2] > 2.0
            if check_bound:
                assert scaled[-1] <= 2.2


class TestEigenvalueBall:
    def test_zero_residual(self):
        ball = eigenvalue_ball(0.0)
        assert ball.chordal_radius == 0.0 and ball.angular_radius == 0.0

    def test_chord_arc_relation(self):
        ball = eigenvalue_ball(1.0)
        assert ball.angular_radius == pytest.approx(math.pi / 3, abs=1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            eigenvalue_ball(2.0)
        with pytest.raises(DomainError):
            eigenvalue_ball(-0.1)

    def test_ball_contains_figure_scale_zero(self):
        seq = VerblunskySequence.power_law(1, 0.25)
        n = 34
        op = build_cmv(seq, n, -1.0)
        r = residual(op, trial_nu(n, gamma_n(n, 0.25)))
        zs = popuc_zeros(seq, n, -1.0)
        nearest = min(zs.args[0], 2 * np.pi - zs.args[-1])
        assert 2 * math.sin(nearest / 2) < eigenvalue_ball(r).chordal_radius


class TestResolventGap:
    def test_hand_case(self):
        seq = VerblunskySequence.from_values([-0.5, -0.4])
        rep = resolvent_gap_check(seq, 2)
        assert rep.min_distance == pytest.approx(math.sqrt(3.0), abs=1e-12)
        assert rep.bound == pytest.approx(0.8, abs=1e-15)
        assert rep.passed

    def test_structured_sequences(self):
        assert resolvent_gap_check(VerblunskySequence.power_law(1, 0.25), 200).passed
        assert resolvent_gap_check(VerblunskySequence.log_law(), 500).passed

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            resolvent_gap_check(VerblunskySequence.constant(-0.5), 4)  # not strict
        with pytest.raises(PreconditionError):
            resolvent_gap_check(VerblunskySequence.from_values([-0.5, -0.4 + 0.1j, -0.3]), 3)
        with pytest.raises(PreconditionError):
            resolvent_gap_check(VerblunskySequence.from_values([-0.5, 0.4]), 2)


class TestMMinusL:
    def test_self_adjoint_for_real_sequences(self):
        op = build_cmv(VerblunskySequence.power_law(1, 0.25), 500, -1.0)
        d = m_minus_l(op)
        assert np.abs(d - d.conj().T).max() <= 1e-12

    def test_sign_pattern_and_spectral_gap(self):
        # M - L has the alternating pattern, and its eigenvalues avoid
        # (-2|alpha_{n-1}|, 2|alpha_{n-1}|): the resolvent lemma mechanism
        n = 12
        seq = VerblunskySequence.power_law(1, 0.25)
        op = build_cmv(seq, n, -1.0)
        d = m_minus_l(op).real
        rep = sign_pattern_invertibility(d)
        assert rep.passed
        eigs = np.linalg.eigvalsh(d)
        assert np.abs(eigs).min() > 2 * abs(seq.alpha(n - 1))


class TestSignPattern:
    def test_spec_examples(self):
        rep = sign_pattern_invertibility(np.array([[1.0, -1.0], [-1.0, -1.0]]))
        assert rep.det_sign == -1.0 and rep.parity_prediction == -1.0 and rep.passed
        rep = sign_pattern_invertibility(
            np.array([[1.0, -1.0, 0.0], [-1.0, -1.0, 1.0], [0.0, 1.0, 1.0]])
        )
        assert rep.passed and rep.m == 1
        # frozen determinants -2 and -3 from the 2x2 / 3x3 expansions
        assert np.linalg.det(np.array([[1.0, -1.0], [-1.0, -1.0]])) == pytest.approx(-2.0)

    def test_parity_rule_even_m(self):
        j = np.diag([1.0, -1.0, 1.0, -1.0]) + np.diag([-1.0, 1.0, -1.0], 1) + np.diag(
            [-1.0, 1.0, -1.0], -1
        )
        rep = sign_pattern_invertibility(j)
        assert rep.m == 2 and rep.parity_prediction == 1.0 and rep.passed

    def test_pattern_violations(self):
        with pytest.raises(PatternError):
            sign_pattern_invertibility(np.array([[1.0, 1.0], [-1.0, -1.0]]))
        with pytest.raises(PatternError):
            sign_pattern_invertibility(np.array([[-1.0, -1.0], [-1.0, -1.0]]))
        with pytest.raises(PatternError):
            sign_pattern_invertibility(
                np.array([[1.0, -1.0, 5.0], [-1.0, -1.0, 1.0], [0.0, 1.0, 1.0]])
            )
        with pytest.raises(PatternError):
            sign_pattern_invertibility(np.ones((2, 3)))

    @settings(max_examples=60, deadline=None)
    @given(
        n=st.integers(2, 16),
        seed=st.integers(0, 2**31 - 1),
    )
    def test_random_magnitudes_always_invertible(self, n, seed):
        rng = np.random.default_rng(seed)
        d = rng.uniform(0, 10, n) * np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
        e = rng.uniform(0, 10, n - 1) * np.where(np.arange(n - 1) % 2 == 0, -1.0, 1.0)
        f = rng.uniform(0, 10, n - 1) * np.where(np.arange(n - 1) % 2 == 0, -1.0, 1.0)
        j = np.diag(d) + np.diag(e, 1) + np.diag(f, -1)
        assert sign_pattern_invertibility(j).passed


def test_dense_csv(tmp_path):
    op = build_cmv(VerblunskySequence.from_values([-0.5]), 2, -1.0)
    path = tmp_path / "cmv.csv"
    write_dense_csv(op, path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "i,j,re,im"
    assert len(lines) == 5  # four nonzero entries
    big = build_cmv(VerblunskySequence.log_law(), 65, -1.0)
    with pytest.raises(DomainError):
        write_dense_csv(big, path)
