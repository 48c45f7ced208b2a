import math
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from dayan import (
    ContractViolationError,
    DayanStep,
    NotInvertibleError,
    StateMatrix,
    bezout_from_result,
    dayan_gcd,
    dayan_inverse,
    permanent,
)
from dayan.arith import div_least_positive
from dayan.deriving_one import LOWER, UPPER

from helpers import brute_force_inverse


def test_inverse_7_mod_480_full_trace():
    trace = dayan_inverse(7, 480)
    assert trace.result == 343
    assert len(trace.steps) == 4
    assert [s.quotient for s in trace.steps] == [68, 1, 1, 2]
    assert [s.remainder for s in trace.steps] == [4, 3, 1, 1]
    assert [s.branch for s in trace.steps] == [UPPER, LOWER, UPPER, LOWER]
    assert [s.state_after.as_tuple() for s in trace.steps] == [
        (1, 7, 68, 4),
        (69, 3, 68, 4),
        (69, 3, 137, 1),
        (343, 1, 137, 1),
    ]


def test_inverse_17_mod_480():
    trace = dayan_inverse(17, 480)
    assert trace.result == 113
    assert len(trace.steps) == 2
    assert [s.quotient for s in trace.steps] == [28, 4]


def test_inverse_identity_after_reduction():
    trace = dayan_inverse(1, 10)
    assert trace.result == 1
    assert trace.steps == ()
    # unreduced inputs collapse the same way
    assert dayan_inverse(11, 10).result == 1
    assert dayan_inverse(481, 480).steps == ()


@pytest.mark.parametrize("m", [3, 4, 5, 10, 97, 480, 2**61 - 1])
def test_inverse_of_m_minus_1(m):
    trace = dayan_inverse(m - 1, m)
    assert trace.result == m - 1


def test_inverse_m_equals_2():
    # smallest legal modulus; every odd a reduces to 1
    trace = dayan_inverse(1, 2)
    assert trace.result == 1 and trace.steps == ()
    assert dayan_inverse(3, 2).result == 1


def test_not_invertible_carries_gcd():
    with pytest.raises(NotInvertibleError) as exc:
        dayan_inverse(4, 480)
    assert exc.value.gcd == 4
    with pytest.raises(NotInvertibleError):
        dayan_inverse(0, 7)


@pytest.mark.parametrize("m", [1, 0, -5])
def test_bad_modulus(m):
    with pytest.raises(ValueError):
        dayan_inverse(3, m)


@pytest.mark.parametrize(
    "cells,expected",
    [
        ((1, 7, 0, 480), 480),
        ((69, 3, 68, 4), 480),
        ((343, 1, 137, 1), 480),
        ((0, 0, 0, 0), 0),
    ],
)
def test_permanent(cells, expected):
    assert permanent(StateMatrix(*cells)) == expected


def _minimal_multiplier(a, m, d):
    # oracle: exhaustive scan for the least u with u*a = d (mod m)
    return next(u for u in range(1, m) if (u * a) % m == d)


@pytest.mark.parametrize("a,m,d,u", [(4, 6, 2, 2), (6, 9, 3, 2), (2, 8, 2, 1)])
def test_gcd_variant_small(a, m, d, u):
    assert _minimal_multiplier(a, m, d) == u
    cert, trace = dayan_gcd(a, m)
    assert cert.d == d and cert.u == u
    assert (cert.u * a) % m == d
    assert cert.u * a + cert.v * m == d
    assert trace.result == u


def test_gcd_variant_matches_inverse_when_coprime():
    cert, trace = dayan_gcd(7, 480)
    assert cert.d == 1 and cert.u == 343
    assert trace.result == dayan_inverse(7, 480).result
    assert [s.state_after.as_tuple() for s in trace.steps] == [
        s.state_after.as_tuple() for s in dayan_inverse(7, 480).steps
    ]


def test_gcd_variant_small_sweep():
    for m in range(2, 80):
        for a in range(1, m):
            cert, trace = dayan_gcd(a, m)
            assert cert.d == math.gcd(a, m)
            assert cert.u == _minimal_multiplier(a, m, cert.d)
            assert cert.u * a + cert.v * m == cert.d
            for s in trace.steps:
                assert permanent(s.state_after) == m
                assert s.remainder >= 1


def test_gcd_variant_domain():
    with pytest.raises(ValueError):
        dayan_gcd(6, 3)  # reduces to 0
    with pytest.raises(ValueError):
        dayan_gcd(3, 1)


@pytest.mark.parametrize(
    "a,m,u,d,v",
    [
        (7, 480, 343, 1, -5),
        (17, 480, 113, 1, -4),
        (1, 9, 1, 1, 0),
        (1, 12345, 1, 1, 0),
    ],
)
def test_bezout_from_result(a, m, u, d, v):
    got = bezout_from_result(a, m, u, d)
    assert got == v
    assert u * a + got * m == d


def test_bezout_from_result_rejects_mismatch():
    with pytest.raises(ContractViolationError):
        bezout_from_result(7, 480, 5, 1)


def test_exhaustive_small_moduli_structure():
    # quick sweep; the acceptance suite runs the full m <= 500 version
    for m in range(3, 121):
        for a in range(2, m):
            if math.gcd(a, m) != 1:
                continue
            trace = dayan_inverse(a, m)
            assert trace.result == brute_force_inverse(a, m)
            assert len(trace.steps) % 2 == 0
            assert len(trace.steps) <= 2 * math.ceil(math.log2(m)) + 4
            x12_prev = a
            for s in trace.steps:
                assert permanent(s.state_after) == m
                assert s.branch == (UPPER if s.index % 2 else LOWER)
                assert s.remainder >= 1
                # x12 moves only on even steps and never increases
                if s.index % 2:
                    assert s.state_after.x12 == x12_prev
                else:
                    assert s.state_after.x12 == s.remainder <= x12_prev
                    x12_prev = s.state_after.x12
            assert trace.steps[-1].state_after.x12 == 1
            assert 1 <= trace.result < m


def test_x22_changes_only_at_odd_steps():
    for m in (97, 360, 499):
        for a in range(2, m):
            if math.gcd(a, m) != 1:
                continue
            x22_prev = m
            for s in dayan_inverse(a, m).steps:
                if s.index % 2:
                    assert s.state_after.x22 == s.remainder
                    x22_prev = s.state_after.x22
                else:
                    assert s.state_after.x22 == x22_prev


def _alternating_variant(a, m):
    """Reference run that alternates branches unconditionally after the first
    step instead of re-testing both cell comparisons each pass."""
    x11, x12, x21, x22 = 1, a, 0, m
    steps = []
    index = 0
    while x12 > 1:
        if index % 2 == 0:
            q, r = div_least_positive(x22, x12)
            x21, x22 = q * x11 + x21, r
            branch = UPPER
        else:
            q, r = div_least_positive(x12, x22)
            x11, x12 = q * x21 + x11, r
            branch = LOWER
        index += 1
        steps.append(DayanStep(index, branch, q, r, StateMatrix(x11, x12, x21, x22)))
    return x11, steps


def test_branch_retest_and_unconditional_alternation_coincide():
    for m in range(3, 121):
        for a in range(2, m):
            if math.gcd(a, m) != 1:
                continue
            u_alt, steps_alt = _alternating_variant(a, m)
            trace = dayan_inverse(a, m)
            assert u_alt == trace.result
            assert steps_alt == list(trace.steps)


def test_bezout_exactness_random_64_bit():
    rng = Random(0xBE20)
    for _ in range(10_000):
        m = rng.getrandbits(64) | (1 << 63)
        a = rng.randrange(1, m)
        cert, _ = dayan_gcd(a, m)
        assert cert.u * a + cert.v * m == cert.d
        assert cert.d == math.gcd(a, m)


@settings(max_examples=200)
@given(st.integers(min_value=2, max_value=1 << 128), st.integers(min_value=1))
def test_inverse_agrees_with_pow(m, offset):
    a = offset % m
    if a == 0 or math.gcd(a, m) != 1:
        return
    assert dayan_inverse(a, m).result == pow(a, -1, m)


def test_trace_json_dict_shape():
    d = dayan_inverse(7, 480).to_json_dict()
    assert d["a"] == "7" and d["m"] == "480" and d["u"] == "343"
    assert [s["i"] for s in d["steps"]] == [1, 2, 3, 4]
    assert d["steps"][0] == {
        "i": 1,
        "branch": "upper",
        "q": "68",
        "r": "4",
        "state": ["1", "7", "68", "4"],
    }
    assert all(isinstance(s["q"], str) and isinstance(s["state"][0], str) for s in d["steps"])
