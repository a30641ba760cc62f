#!/usr/bin/env python
"""
Tests for the K formulas, K policies and the matrix admission rule.
"""

import pytest

from triangle_analytics.exceptions import CapacityError, UsageError
from triangle_analytics.policies.k_selection import (
    AYZ_PSEUDO,
    AYZ_PSEUDO_POWERLAW,
    POWERLAW,
    SQRT_M,
    SQRT_MLOGN,
    KPolicy,
    k_formula,
    parse_k_policy,
)
from triangle_analytics.policies.matrix_guard import check_matrix_allowed, matrix_bytes, max_matrix_n


@pytest.mark.parametrize("rule, n, m, alpha, omega, expected", [
    (SQRT_M, 50, 100, None, 3.0, 10),
    (SQRT_M, 50, 101, None, 3.0, 11),
    (SQRT_M, 50, 0, None, 3.0, 0),
    (POWERLAW, 1024, 5000, 2.0, 3.0, 32),
    (AYZ_PSEUDO, 100, 4096, None, 3.0, 64),
    (AYZ_PSEUDO, 100, 4096, None, 2.0, 16),
    (SQRT_MLOGN, 100, 100, None, 3.0, 22),
    (SQRT_MLOGN, 1, 100, None, 3.0, 0),
    (AYZ_PSEUDO_POWERLAW, 1000, 5000, 2.0, 3.0, 16),
    (POWERLAW, 0, 0, 2.5, 3.0, 0),
])
def test_k_formula(rule, n, m, alpha, omega, expected):
    assert k_formula(rule, n, m, alpha, omega) == expected


def test_k_formula_rejects_unknown_rule():
    with pytest.raises(UsageError, match="unknown K rule"):
        k_formula("cube-root", 10, 10)


@pytest.mark.parametrize("rule, alpha", [(POWERLAW, None), (POWERLAW, 1.0), (AYZ_PSEUDO_POWERLAW, 0.5)])
def test_power_law_rules_need_alpha(rule, alpha):
    with pytest.raises(UsageError, match="alpha"):
        k_formula(rule, 100, 100, alpha)


def test_k_formula_rejects_small_omega():
    with pytest.raises(UsageError, match="omega"):
        k_formula(AYZ_PSEUDO, 100, 100, omega=1.5)


def test_k_formula_rejects_negative_counts():
    with pytest.raises(UsageError):
        k_formula(SQRT_M, 10, -1)


def test_parse_explicit_k():
    policy = parse_k_policy("12")

    assert policy == KPolicy(explicit=12)
    assert not policy.needs_alpha
    assert policy.resolve(100, 1000) == 12
    assert str(policy) == "12"


def test_parse_auto_uses_sqrt_m():
    policy = parse_k_policy("auto")

    assert policy.rule == SQRT_M
    assert policy.resolve(10, 100) == 10
    assert str(policy) == "auto:sqrt-m"


def test_parse_auto_rule():
    policy = parse_k_policy("auto:powerlaw")

    assert policy.rule == POWERLAW
    assert policy.needs_alpha
    assert policy.resolve(1024, 0, alpha=2.0) == 32


@pytest.mark.parametrize("text", ["auto:bogus", "-1", "twelve", "", "3.5"])
def test_parse_k_policy_rejects(text):
    with pytest.raises(UsageError):
        parse_k_policy(text)


def test_matrix_bytes():
    assert matrix_bytes(0) == 0
    assert matrix_bytes(8) == 8
    assert matrix_bytes(9) == 18


def test_matrix_cap_from_settings(settings):
    settings.TRIANGLES_MAX_MATRIX_N = 10

    assert max_matrix_n() == 10
    assert max_matrix_n(20) == 20
    check_matrix_allowed("matrix", 10)
    with pytest.raises(CapacityError, match="--max-matrix-n"):
        check_matrix_allowed("matrix", 11)
    check_matrix_allowed("matrix", 11, cap=11)


def test_matrix_cap_rejects_huge_graph():
    with pytest.raises(CapacityError):
        check_matrix_allowed("ayz-pseudo-listing", 1_000_000)
