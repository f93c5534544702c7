import pytest

import qcong as qc
from qcong import EXACT
from qcong.mock_theta import a_b, b_appell, b_eulerian, f3_series, omega_series
from qcong.products import eta_quotient


# list-based polynomial helpers so the oracle shares no code with the package
def poly_mul(a, b, n):
    out = [0] * n
    for i in range(min(len(a), n)):
        if a[i]:
            for j in range(min(len(b), n - i)):
                out[i + j] += a[i] * b[j]
    return out


def poly_inv(a, n):
    assert a[0] == 1
    b = [0] * n
    b[0] = 1
    for k in range(1, n):
        b[k] = -sum(a[i] * b[k - i] for i in range(1, min(k, len(a) - 1) + 1))
    return b


def binomial(c, j, n):
    out = [0] * n
    out[0] = 1
    if j < n:
        out[j] = c
    return out


def omega_by_termwise_expansion(n, arg_sign=1):
    """Each term built from scratch densely; no shared recurrence state."""
    total = [0] * n
    i = 0
    while 2 * i * (i + 1) < n:
        den = [1] + [0] * (n - 1)
        for j in range(i + 1):
            # (1 - (s*q)^(2j+1)) = (1 - s*q^(2j+1)) since s = +-1
            den = poly_mul(den, binomial(-arg_sign, 2 * j + 1, n), n)
        term = poly_inv(poly_mul(den, den, n), n)
        for e in range(2 * i * (i + 1), n):
            total[e] += term[e - 2 * i * (i + 1)]
        i += 1
    return total


def b_by_termwise_expansion(n):
    total = [0] * n
    i = 0
    while i * (i + 1) < n:
        num = [1] + [0] * (n - 1)
        for j in range(i):
            num = poly_mul(num, binomial(1, 2 * j + 2, n), n)
        den = [1] + [0] * (n - 1)
        for j in range(i + 1):
            den = poly_mul(den, binomial(-1, 2 * j + 1, n), n)
        term = poly_mul(num, poly_inv(poly_mul(den, den, n), n), n)
        for e in range(i * (i + 1), n):
            total[e] += term[e - i * (i + 1)]
        i += 1
    return total


def f3_by_termwise_expansion(n):
    total = [0] * n
    i = 0
    while i * i < n:
        den = [1] + [0] * (n - 1)
        for j in range(i):
            den = poly_mul(den, binomial(1, j + 1, n), n)
        term = poly_inv(poly_mul(den, den, n), n)
        for e in range(i * i, n):
            total[e] += term[e - i * i]
        i += 1
    return total


class TestOmega:
    def test_constant_term(self):
        assert omega_series(1).coefficients() == [1]

    def test_matches_termwise_oracle(self):
        n = 48
        assert omega_series(n).coefficients() == omega_by_termwise_expansion(n)

    def test_sign_substitution(self):
        n = 40
        flipped = qc.substitute_power(omega_series(n), 1, -1)
        assert flipped.coefficients() == omega_by_termwise_expansion(n, arg_sign=-1)
        assert flipped[1] == -omega_series(n)[1]


class TestB:
    def test_a_b_low_values(self):
        assert a_b(0) == 1
        got = b_eulerian(44).coefficients()
        assert got == b_by_termwise_expansion(44)

    def test_representations_agree(self):
        n = 300
        assert b_eulerian(n) == b_appell(n)

    def test_even_part_is_eta_quotient(self):
        n = 200
        lhs = qc.dissect(b_eulerian(2 * n), 2, 0).truncate(n)
        assert lhs == eta_quotient({2: 5, 1: -4}, n)

    def test_4n_plus_1_part_is_doubled_eta_quotient(self):
        n = 200
        lhs = qc.dissect(b_eulerian(4 * n), 4, 1).truncate(n)
        assert lhs == 2 * eta_quotient({2: 8, 1: -7}, n)

    def test_odd_part_is_even(self):
        n = 300
        odd = qc.dissect(b_eulerian(2 * n), 2, 1).truncate(n)
        assert qc.congruent_to_order(odd, qc.zero_series(EXACT, n), 2, n)

    def test_parity_is_lacunary_theta(self):
        # mod 2 the whole of B collapses onto exponents 2n^2+2n
        n = 300
        theta = [0] * n
        k = 0
        while 2 * k * k + 2 * k < n:
            theta[2 * k * k + 2 * k] = 1
            k += 1
        assert qc.congruent_to_order(
            b_eulerian(n), qc.Series(EXACT, theta), 2, n)


class TestF3:
    def test_constant_term(self):
        assert f3_series(1).coefficients() == [1]

    def test_matches_termwise_oracle(self):
        n = 40
        assert f3_series(n).coefficients() == f3_by_termwise_expansion(n)

    def test_watson_style_eta_decomposition(self):
        # f3 evaluated at q^8 splits into omega pieces plus an eta quotient
        n = 200
        lhs = (
            qc.substitute_power(f3_series(-(-n // 8) + 1), 8, 1).truncate(n)
            - 2 * qc.shift(qc.substitute_power(omega_series(n), 1, -1), 1)
            - 2 * qc.shift(
                qc.substitute_power(omega_series(-(-n // 4) + 1), 4, -1), 3
            ).truncate(n)
        )
        rhs = eta_quotient({1: 2, 4: 8, 2: -5, 8: -4}, n)
        assert lhs == rhs


@pytest.mark.parametrize("builder", [omega_series, b_eulerian, b_appell, f3_series])
def test_order_validation(builder):
    with pytest.raises(ValueError):
        builder(0)
