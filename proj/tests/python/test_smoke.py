import pytest

import iterprimes as ip


def test_primes():
    assert ip.is_prime(2**61 - 1)
    assert not ip.is_prime(561)
    assert ip.prime_count(10**6) == 78498
    assert ip.nth_prime(10**4) == 104729
    assert ip.sieve_segment(90, 110) == [97, 101, 103, 107, 109]


def test_invalid_input():
    with pytest.raises(ip.OutOfSupportedRange):
        ip.prime_count(2**64)
    with pytest.raises(ip.Error):
        ip.nth_prime(0)


def test_towers_and_counts():
    p = ip.IteratedPrimes()
    tower = p.iterate(1, 7)
    assert tower["values"] == [2, 3, 5, 11, 31, 127, 709]
    assert not tower["truncated"]
    assert [p.diag(k) for k in range(1, 6)] == [2, 5, 31, 277, 5381]
    assert p.count_tower(1, 100) == 5
    assert p.count_diag(5381) == 5


def test_budget():
    p = ip.IteratedPrimes(budget=1000)
    assert p.iterate(1, 10)["truncated"]
    with pytest.raises(ip.BudgetExceeded):
        p.diag(9)


def test_ratios_decrease():
    ratios = [r[3] for r in ip.IteratedPrimes().ratio_to_diagonal(1, 6)]
    assert all(a > b for a, b in zip(ratios[1:], ratios[2:]))


def test_bounds_and_certify():
    checks = {c["bound"]: c for c in ip.check_bounds(10, 2, 109)}
    assert checks["factorial_upper"]["holds"] is True
    assert checks["large_index_lower"]["applicable"] is False
    text, value = ip.comparator(10**6)
    assert text.startswith("5.26146")
    assert value == pytest.approx(5.26146, abs=1e-5)
    assert ip.closed_form_floor(30)[0].startswith("0.3262768")
    assert ip.certify_default()["passed"]
