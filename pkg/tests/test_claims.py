"""The claim-verification engine: statuses, known discrepancies, determinism."""

from pnfield import claims
from pnfield.field import get_field


def test_enumerate_field_specs():
    specs = claims.enumerate_field_specs(4, 64)
    assert (2, 1, 2) in specs
    assert (2, 2, 2) in specs  # F_16 over F_4
    assert (7, 1, 2) in specs
    assert all((p**k) ** n <= 64 for p, k, n in specs)
    assert all(n >= 2 for _, _, n in specs)
    orders = [(p**k) ** n for p, k, n in specs]
    assert orders == sorted(orders)
    assert claims.enumerate_field_specs(10, 8) == []


def test_integer_claims_all_pass():
    results = claims.integer_claims(seed=5, phi_limit=2000, pair_trials=300)
    assert all(r.status != claims.FAIL for r in results)
    by_id = {r.claim_id: r for r in results}
    assert by_id["totient-product-vs-counting"].status == claims.ASSERTED_PASS
    assert by_id["mertens-bound-ratios"].status == claims.REPORTED
    # the two broken exercises are reported, not asserted
    assert by_id["exercise-phi-subfield-sum"].status == claims.REPORTED
    assert "fails" in by_id["exercise-phi-subfield-sum"].detail


def test_poly_claims_statuses():
    results = claims.poly_claims(5, 4)
    by_id = {r.claim_id: r for r in results}
    assert by_id["poly-totient-divisor-sum"].status == claims.ASSERTED_PASS
    assert by_id["poly-phi-integer-formula"].status == claims.ASSERTED_PASS
    # Ω_5(x^4-1) = 4 > φ(4) = 2: the claimed bound fails and is reported
    assert by_id["omega-phi-bound"].status == claims.REPORTED
    assert "fails" in by_id["omega-phi-bound"].detail
    results23 = claims.poly_claims(2, 3)
    by_id23 = {r.claim_id: r for r in results23}
    assert "holds" in by_id23["omega-phi-bound"].detail


def test_field_claims_no_failures():
    for p, k, n in [(2, 1, 3), (3, 1, 2), (2, 2, 2), (2, 1, 4)]:
        ctx = get_field(p, k, n)
        results = claims.field_claims(ctx, seed=11)
        failures = [r for r in results if r.status == claims.FAIL]
        assert not failures, failures


def test_subsum_partition():
    ctx = get_field(2, 1, 3)
    results = claims.subsum_partition_claims(ctx)
    by_id = {r.claim_id: r for r in results}
    assert by_id["subsum-partition-total"].status == claims.ASSERTED_PASS
    assert by_id["subsum-claimed-vanishing"].status == claims.REPORTED
    assert "nonzero" in by_id["subsum-claimed-vanishing"].detail


def test_run_verify_smoke():
    results = claims.run_verify(4, 32, seed=1)
    counts = claims.summarize(results)
    assert counts[claims.FAIL] == 0
    assert counts[claims.REPORTED] >= 3
    text = claims.format_report(results, seed=1)
    assert text.endswith("0 fail\n")
    # deterministic across calls
    results2 = claims.run_verify(4, 32, seed=1)
    assert claims.format_report(results2, seed=1) == text


def test_run_verify_full_range_under_five_minutes():
    """The flagship run: every claim suite over every field up to 4096."""
    import time

    start = time.monotonic()
    results = claims.run_verify(4, 4096, seed=7)
    elapsed = time.monotonic() - start
    counts = claims.summarize(results)
    assert counts[claims.FAIL] == 0
    assert counts[claims.ASSERTED_PASS] > 500
    assert counts[claims.REPORTED] >= 3
    assert elapsed < 300, f"verify at 4096 took {elapsed:.0f}s"
