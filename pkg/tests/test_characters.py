"""Characters, Gauss sums, the four characteristic functions, and the
character-sum bound suite."""

import cmath
import math

import pytest

from pnfield import characters as ch
from pnfield.field import get_field
from pnfield.numtheory import euler_phi


def test_discrete_log_examples():
    f4 = get_field(2, 1, 2)
    assert ch.discrete_log(f4, f4.reference_tau) == 1
    assert ch.discrete_log(f4, 1) == 0
    assert ch.discrete_log(f4, 3) == 2  # α² = α + 1
    with pytest.raises(ValueError):
        ch.discrete_log(f4, 0)


def test_eval_char_examples():
    f4 = get_field(2, 1, 2)
    triv_add = ch.CharSpec(kind="additive", parameter=0)
    assert ch.eval_char(f4, triv_add, 2).value == 1
    triv_mult = ch.CharSpec(kind="multiplicative", parameter=0)
    assert ch.eval_char(f4, triv_mult, 3).value == 1
    psi1 = ch.CharSpec(kind="additive", parameter=1)
    val = ch.eval_char(f4, psi1, 2)  # tr(α) = 1 so e(1/2) = -1
    assert val.numerator == 1 and val.denominator == 2
    assert val.value == pytest.approx(-1)
    with pytest.raises(ValueError):
        ch.eval_char(f4, triv_mult, 0)


def test_unit_complex_invariants():
    for num, den in [(0, 1), (1, 2), (3, 7), (5, 8), (12, 13)]:
        u = ch.UnitComplex.from_exponent(num, den)
        assert abs(abs(u.value) - 1) < 1e-12
        assert abs(u.value - cmath.exp(2j * cmath.pi * u.numerator / u.denominator)) < 1e-9


def test_additive_char_order_examples():
    f4 = get_field(2, 1, 2)
    assert ch.additive_char_order(f4, 0) == (1,)
    assert ch.additive_char_order(f4, 2) == (1, 0, 1)  # primitive character
    assert ch.additive_char_order(f4, 1) == (1, 1)


def test_additive_char_group_counts():
    from pnfield.polyfq import monic_divisors, poly_deg, poly_divmod

    for p, k, n in [(2, 1, 3), (3, 1, 2), (2, 1, 4), (5, 1, 2), (2, 2, 2)]:
        ctx = get_field(p, k, n)
        orders = {}
        for c in range(ctx.order):
            d = ctx.additive_order(c)
            orders[d] = orders.get(d, 0) + 1
        assert sum(orders.values()) == ctx.order
        for d in monic_divisors(ctx.add_factorization):
            covered = sum(
                cnt for dd, cnt in orders.items() if not poly_divmod(ctx.fq, d, dd)[1]
            )
            assert covered == ctx.q ** poly_deg(d)


def test_gauss_sum_exact_triple():
    for p, k, n in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (5, 1, 2), (2, 2, 2)]:
        ctx = get_field(p, k, n)
        m = ctx.order - 1
        assert ch.gauss_sum(ctx, 0, 0) == complex(m)
        assert ch.gauss_sum(ctx, 1, 0) == 0
        assert ch.gauss_sum(ctx, 0, 1) == complex(-1)


def test_gauss_sum_trivial_cases_match_float_oracle():
    # independent float oracle: literal summation with cmath only
    for p, k, n in [(2, 1, 3), (3, 1, 2)]:
        ctx = get_field(p, k, n)
        ctx.ensure_tables()
        m = ctx.order - 1
        for b, c in [(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)]:
            direct = 0j
            for a in range(1, ctx.order):
                ang_m = b * ch.discrete_log(ctx, a) / m
                ang_p = ctx.trace(ctx.mul(c, a)) / ctx.p
                direct += cmath.exp(2j * cmath.pi * (ang_m + ang_p))
            assert abs(ch.gauss_sum(ctx, b, c) - direct) < 1e-9


def test_gauss_sum_modulus():
    for p, k, n in [(2, 1, 3), (3, 1, 2), (2, 1, 4), (5, 1, 2)]:
        ctx = get_field(p, k, n)
        m = ctx.order - 1
        for b in range(1, m):
            for c in range(1, ctx.order):
                assert abs(abs(ch.gauss_sum(ctx, b, c)) - ctx.order**0.5) < 1e-6


def test_indicator_primitive_examples():
    f4 = get_field(2, 1, 2)
    assert ch.indicator_primitive_dd(f4, 2) == 1
    assert ch.indicator_primitive_dd(f4, 1) == 0
    f8 = get_field(2, 1, 3)
    for g in range(2, 8):
        assert ch.indicator_primitive_dd(f8, g) == 1
    assert ch.indicator_primitive_df(f4, 3) == 1  # log = 2, gcd(2, 3) = 1
    assert ch.indicator_primitive_df(f4, 1) == 0
    f9 = get_field(3, 1, 2)
    tau_sq = f9.mul(f9.reference_tau, f9.reference_tau)
    assert ch.indicator_primitive_df(f9, tau_sq) == 0  # even log vs q^n-1 = 8
    with pytest.raises(ValueError):
        ch.indicator_primitive_dd(f4, 0)
    with pytest.raises(ValueError):
        ch.indicator_primitive_df(f4, 0)


def test_indicator_normal_dd_examples():
    f4 = get_field(2, 1, 2)
    assert ch.indicator_normal_dd(f4, 2) is None  # p | n: not applicable
    f9 = get_field(3, 1, 2)
    assert ch.indicator_normal_dd(f9, 4) == 1  # 1+i has maximal additive order
    assert ch.indicator_normal_dd(f9, 1) == 0
    assert ch.indicator_normal_dd(f9, 0) == 0


def test_indicator_normal_df_examples():
    f4 = get_field(2, 1, 2)
    eta = f4.reference_tau
    assert ch.indicator_normal_df(f4, 2, eta) == 1
    assert ch.indicator_normal_df(f4, 1, eta) == 0
    # constructed witness: α = s∘η with gcd(s, x^n-1) = 1
    f9 = get_field(3, 1, 2)
    eta9 = f9.reference_tau
    for s in f9.coprime_s_polys():
        alpha = f9.apply_linearized(s, eta9)
        assert ch.indicator_normal_df(f9, alpha, eta9) == 1
    with pytest.raises(ValueError):
        ch.indicator_normal_df(f4, 2, 1)  # η = 1 is not normal
    with pytest.raises(ValueError):
        ch.indicator_normal_df(f4, 0, eta)


def test_indicator_equivalence_small_fields():
    for p, k, n in [(2, 1, 2), (2, 1, 3), (2, 1, 4), (3, 1, 2), (3, 1, 3), (5, 1, 2), (2, 2, 2)]:
        ctx = get_field(p, k, n)
        tau = ctx.reference_tau
        dd_applicable = ctx.n % ctx.p != 0
        for a in range(1, ctx.order):
            prim = ctx.is_primitive(a)
            norm = ctx.is_normal(a)
            assert ch.indicator_primitive_dd(ctx, a) == prim
            assert ch.indicator_primitive_df(ctx, a) == prim
            assert ch.indicator_normal_df(ctx, a, tau) == norm
            if dd_applicable:
                assert ch.indicator_normal_dd(ctx, a) == norm


def test_indicator_literal_float_crosschecks():
    for p, k, n in [(2, 1, 2), (3, 1, 2), (2, 1, 3)]:
        ctx = get_field(p, k, n)
        tau = ctx.reference_tau
        for a in range(1, ctx.order):
            assert ch.indicator_primitive_dd_literal(ctx, a) == ch.indicator_primitive_dd(ctx, a)
            assert ch.indicator_primitive_df_literal(ctx, a) == ch.indicator_primitive_df(ctx, a)
            assert ch.indicator_normal_df_literal(ctx, a, tau) == ch.indicator_normal_df(ctx, a, tau)
            lit = ch.indicator_normal_dd_literal(ctx, a)
            assert lit == ch.indicator_normal_dd(ctx, a)


def test_df_rotation_invariance():
    ctx = get_field(3, 1, 2)
    for a in range(1, 9):
        base = ch.indicator_primitive_df_literal(ctx, a, rotation=0)
        for rot in (1, 2, 3, 5):
            assert ch.indicator_primitive_df_literal(ctx, a, rotation=rot) == base


def test_char_sum_bound_helpers():
    f8 = get_field(2, 1, 3)
    # singleton: ratio = |ψ(1)| / q^(n/2)
    ratio = ch.double_product_sum_ratio(f8, 1, [1], [1])
    assert ratio == pytest.approx(8**-0.5)
    with pytest.raises(ValueError):
        ch.double_product_sum_ratio(f8, 0, [1], [1])
    with pytest.raises(ValueError):
        ch.shifted_sum_ratio(f8, 0, [1], [1])


def test_char_sum_bound_suite():
    f8 = get_field(2, 1, 3)
    suite = ch.char_sum_bound_suite(f8, trials=100, seed=99)
    ent = {e["lemma-id"]: e for e in suite["entries"]}
    assert ent["product-double-sum"]["pass"]
    assert ent["shifted-double-sum"]["pass"]
    assert ent["product-double-sum"]["maxRatio"] <= 1 + 1e-9
    with pytest.raises(ValueError):
        ch.char_sum_bound_suite(f8, trials=0, seed=1)


def test_char_sum_bound_suite_size_cap():
    from pnfield.errors import ResourceLimitError
    from pnfield.field import build_field

    big = build_field(2, 1, 15)  # 2^15 > 2^14 cap for direct double sums
    with pytest.raises(ResourceLimitError):
        ch.char_sum_bound_suite(big, trials=1, seed=1)


def test_units_sum_can_exceed_bound():
    # F_8: the all-ones trace functional pushes the normal-element sum to 3 > 8^(1/2)
    f8 = get_field(2, 1, 3)
    worst = max(ch.units_sum_ratio(f8, c) for c in range(1, 8))
    assert worst > 1.0


def test_primitive_exp_sum_examples():
    f4 = get_field(2, 1, 2)
    rec = f4 and ch.primitive_exp_sum(f4, 1)
    assert rec.exact_value == -euler_phi(3) == -2
    f9 = get_field(3, 1, 2)
    tau_sq = f9.mul(f9.reference_tau, f9.reference_tau)
    rec9 = ch.primitive_exp_sum(f9, tau_sq)
    assert rec9.exact_value == -euler_phi(8) == -4
    with pytest.raises(ValueError):
        ch.primitive_exp_sum(f4, f4.reference_tau)  # primitive input rejected
    with pytest.raises(ValueError):
        ch.primitive_exp_sum(f4, 0)


def test_primitive_exp_sum_direct_oracle():
    for p, k, n in [(2, 1, 2), (3, 1, 2), (2, 1, 4), (2, 1, 3)]:
        ctx = get_field(p, k, n)
        for a in range(1, ctx.order):
            if ctx.is_primitive(a):
                continue
            rec = ch.primitive_exp_sum(ctx, a)
            assert rec.exact_value == -rec.phi_value
            assert ch.primitive_exp_sum_direct(ctx, a) == rec.exact_value


def test_fully_literal_exp_sum_tiny():
    # the completely unfactored double sum on F_4 and F_9
    for p, k, n in [(2, 1, 2), (3, 1, 2)]:
        ctx = get_field(p, k, n)
        qn = ctx.order
        m = qn - 1
        for a in range(1, qn):
            if ctx.is_primitive(a):
                continue
            la = ch.discrete_log(ctx, a)
            total = 0j
            for t in range(1, qn):
                for s in range(1, qn):
                    if math.gcd(s, m) == 1:
                        total += cmath.exp(-2j * cmath.pi * (s - la) * t / qn)
            assert abs(total - ch.primitive_exp_sum(ctx, a).exact_value) < 1e-6


def test_fourier_identities():
    for p, k, n in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 1, 4)]:
        ctx = get_field(p, k, n)
        res_add, res_mult = ch.fourier_identity_max_residuals(ctx, 1, 1)
        assert res_add < 1e-8
        assert res_mult < 1e-8


def test_subsum_partition_matches_literal_quadruple_sum():
    """The closed-form N00..N11 split equals the literal (t1, t2) partition."""
    for p, k, n in [(2, 1, 2), (3, 1, 2)]:
        ctx = get_field(p, k, n)
        qn = ctx.order
        m = qn - 1
        eta = ctx.reference_tau
        log = ctx.log_table
        s_ints = [s for s in range(1, qn) if math.gcd(s, m) == 1]
        s_polys = ctx.coprime_s_polys()
        parts = [0j, 0j, 0j, 0j]  # N00, N01, N10, N11
        for a in range(1, qn):
            la = log[a]
            for t1 in range(qn):
                inner1 = sum(
                    cmath.exp(2j * cmath.pi * (s - la) * t1 / qn) for s in s_ints
                ) / qn
                for t2 in range(qn):
                    inner2 = sum(
                        cmath.exp(2j * cmath.pi * (log[ctx.apply_linearized(sp, eta)] - la) * t2 / qn)
                        for sp in s_polys
                    ) / qn
                    if t1 == 0 and t2 == 0:
                        parts[0] += inner1 * inner2
                    elif t1 != 0 and t2 == 0:
                        parts[1] += inner1 * inner2
                    elif t1 == 0 and t2 != 0:
                        parts[2] += inner1 * inner2
                    else:
                        parts[3] += inner1 * inner2
        phi = euler_phi(m)
        from pnfield.polyfq import poly_phi

        phi_poly = poly_phi(ctx.add_factorization)
        pn = sum(1 for a in range(1, qn) if ctx.is_primitive_normal(a))
        a_size = qn - 1
        expected = [
            phi * phi_poly * a_size / qn**2,
            phi_poly / qn * (phi - phi * a_size / qn),
            phi / qn * (phi_poly - phi_poly * a_size / qn),
            pn - phi_poly * phi / qn - phi * phi_poly / qn + phi * phi_poly * a_size / qn**2,
        ]
        for got, want in zip(parts, expected):
            assert abs(got.imag) < 1e-6
            assert got.real == pytest.approx(want, abs=1e-6)
        assert sum(p.real for p in parts) == pytest.approx(pn, abs=1e-6)
