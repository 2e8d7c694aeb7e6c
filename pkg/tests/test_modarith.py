import numpy as np
import pytest

from nttbench.bench import HE_SUITE, PQC_SUITE
from nttbench.modarith import (
    NttParams,
    ParameterError,
    build_params,
    find_psi,
    is_prime,
    mod_inv,
    mod_mul,
    mod_pow,
    validate_params,
)

REGISTRY = PQC_SUITE.entries + HE_SUITE.entries


def pow_bruteforce(base, exp, q):
    """Oracle: repeated multiplication, O(exp)."""
    acc = 1
    for _ in range(exp):
        acc = acc * base % q
    return acc


def inv_exhaustive(x, q):
    """Oracle: scan all residues for the inverse."""
    for y in range(q):
        if x * y % q == 1:
            return y
    raise AssertionError(f"{x} has no inverse mod {q}")


def psi_scan(q, n):
    """Oracle: linear scan with the builtin exponentiation."""
    for x in range(2, q):
        if pow(x, n, q) == q - 1 and pow(x, 2 * n, q) == 1:
            return x
    raise AssertionError("no root found")


def test_mod_mul_examples():
    assert mod_mul(0, 5, 17) == 0
    assert mod_mul(4, 4, 17) == 16
    # 169 = 9*17 + 16
    assert mod_mul(13, 13, 17) == 16


def test_mod_pow_zero_exponent():
    for x in (0, 1, 5, 12288):
        assert mod_pow(x, 0, 12289) == 1


def test_mod_pow_examples():
    assert mod_pow(2, 10, 12289) == 1024
    # 4^2 = 16 = -1 mod 17, so 4^4 = 1
    assert mod_pow(4, 4, 17) == 1
    assert mod_pow(4, 4, 17) == pow_bruteforce(4, 4, 17)


def test_mod_pow_negative_exponent_rejected():
    with pytest.raises(ValueError):
        mod_pow(2, -1, 17)


@pytest.mark.parametrize("q", [17, 7681])
def test_mod_pow_matches_bruteforce(q):
    for base in range(0, 51):
        for exp in range(0, 51):
            assert mod_pow(base, exp, q) == pow_bruteforce(base % q, exp, q)


def test_mod_inv_examples():
    assert mod_inv(1, 17) == 1
    assert mod_inv(1, 12289) == 1
    assert mod_inv(2, 17) == inv_exhaustive(2, 17) == 9
    assert mod_inv(4, 17) == inv_exhaustive(4, 17) == 13


def test_mod_inv_zero_rejected():
    with pytest.raises(ValueError):
        mod_inv(0, 17)


@pytest.mark.parametrize("q", [17, 12289, 8380417, 1073479681])
def test_mod_inv_random_roundtrip(q):
    rng = np.random.default_rng(q)
    for x in rng.integers(1, q, size=1000):
        x = int(x)
        assert mod_mul(x, mod_inv(x, q), q) == 1


def test_is_prime_matches_trial_division():
    def trial(n):
        if n < 2:
            return False
        d = 2
        while d * d <= n:
            if n % d == 0:
                return False
            d += 1
        return True

    for n in range(2000):
        assert is_prime(n) == trial(n), n


def test_is_prime_large_values():
    assert is_prime(7681)
    assert is_prime(12289)
    assert is_prime(8380417)
    assert is_prime(1073479681)
    assert is_prime((1 << 31) - 1)
    assert not is_prime(561)  # Carmichael number
    assert not is_prime(7681 * 12289)


def test_validate_params_accepts_registry_points():
    validate_params(12289, 2048)
    validate_params(17, 2)
    for q, n in REGISTRY:
        validate_params(q, n)


def test_validate_params_error_variants():
    with pytest.raises(ParameterError) as exc:
        validate_params(15, 4)
    assert exc.value.code == "composite_modulus"

    with pytest.raises(ParameterError) as exc:
        validate_params(17, 3)
    assert exc.value.code == "degree_not_power_of_two"

    with pytest.raises(ParameterError) as exc:
        validate_params(17, 1)
    assert exc.value.code == "degree_not_power_of_two"

    # 7680 = 2^9 * 15, so 1024 does not divide it
    with pytest.raises(ParameterError) as exc:
        validate_params(7681, 512)
    assert exc.value.code == "no_root_of_unity"

    with pytest.raises(ParameterError) as exc:
        validate_params((1 << 31) + 11, 2)
    assert exc.value.code == "modulus_out_of_range"


def test_find_psi_smallest_root():
    # 4 and 13 are the square roots of -1 mod 17; 4 is the smaller
    assert find_psi(17, 2) == 4
    assert find_psi(12289, 512) == psi_scan(12289, 512) == 49


def test_find_psi_deterministic():
    assert find_psi(12289, 1024) == find_psi(12289, 1024)


@pytest.mark.parametrize("q,n", REGISTRY)
def test_find_psi_postcondition_registry(q, n):
    psi = find_psi(q, n)
    assert mod_pow(psi, n, q) == q - 1
    assert mod_pow(psi, 2 * n, q) == 1


@pytest.mark.parametrize("q,n", REGISTRY)
def test_psi_primitivity_registry(q, n):
    psi = find_psi(q, n)
    # 2n is a power of two, so the proper divisors are 1, 2, 4, ..., n
    k = 1
    while k < 2 * n:
        assert mod_pow(psi, k, q) != 1, f"psi^{k} = 1, order below {2 * n}"
        k *= 2


def test_build_params_example():
    params = build_params(17, 2)
    assert params == NttParams(q=17, n=2, psi=4, psi_inv=13, n_inv=9)


def test_build_params_large_point():
    params = build_params(12289, 1024)
    assert mod_pow(params.psi, 1024, 12289) == 12288
    assert params.psi * params.psi_inv % 12289 == 1
    assert 1024 * params.n_inv % 12289 == 1


def test_build_params_rejects_composite():
    with pytest.raises(ParameterError) as exc:
        build_params(15, 4)
    assert exc.value.code == "composite_modulus"


def test_nttparams_rejects_inconsistent_fields():
    with pytest.raises(ParameterError):
        NttParams(q=17, n=2, psi=3, psi_inv=6, n_inv=9)  # 3^2 = 9 != -1
    with pytest.raises(ParameterError):
        NttParams(q=17, n=2, psi=4, psi_inv=12, n_inv=9)
    with pytest.raises(ParameterError):
        NttParams(q=17, n=2, psi=4, psi_inv=13, n_inv=8)
