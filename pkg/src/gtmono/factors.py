"""Gegenbauer polynomials, embedding factors and CK normalization constants.

The harmonic embedding factor of step a over base degree j in dimension m is

    F = (j+1)_a / (m+2j-2)_a * |x|^a * C_a^{m/2+j-1}(x_m / |x|),

a genuine polynomial: the Gegenbauer sum only contains powers of the same
parity as a, so each term 2^t x_m^t |x|^(a-t) has an even power of |x| and
expands into integer powers of x_1^2 + ... + x_m^2.  No radical type exists
anywhere.  The monogenic embedding factor adds the vector-valued correction

    X = F_{m,j} + (j+1)/(m+2j-1) * F_{m,j+1} * (x_1 e_1 + ... + x_{m-1} e_{m-1}) e_m

one step down, with the convention F of step -1 being zero.  The factors are
normalized so the bases built from them have the Appell property; the mu
constants relate them back to the Cauchy-Kovalevskaya extension.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .clifford import Multivector
from .poly import CliffPoly
from .scalars import factorial, pochhammer


def _check_spec(m: int, j: int, a: int):
    if m < 3 or j < 0 or a < 0:
        raise ValueError(f"invalid factor spec: m={m}, j={j}, a={a} (need m>=3, j>=0, a>=0)")


def gegenbauer(nu, k: int) -> list[Fraction]:
    """Coefficient list of the Gegenbauer polynomial C_k^nu, index = power."""
    if k < 0:
        raise ValueError(f"degree must be nonnegative, got {k}")
    nu = Fraction(nu)
    coeffs = [Fraction(0)] * (k + 1)
    for i in range(k // 2 + 1):
        t = k - 2 * i
        coeffs[t] = (-1) ** i * pochhammer(nu, k - i) * 2**t / (factorial(i) * factorial(t))
    return coeffs


def gegenbauer_at_zero(nu, k: int) -> Fraction:
    """C_k^nu(0): zero for odd k, (-1)^l (nu)_l / l! for k = 2l."""
    if k % 2:
        return Fraction(0)
    l = k // 2
    return (-1) ** l * pochhammer(nu, l) / factorial(l)


@lru_cache(maxsize=None)
def _radius_squared(m: int) -> CliffPoly:
    total = CliffPoly.zero(m)
    for i in range(1, m + 1):
        total = total + CliffPoly.variable(i, m) ** 2
    return total


@lru_cache(maxsize=None)
def embedding_factor_F(m: int, j: int, a: int) -> CliffPoly:
    """Scalar harmonic embedding factor of step a over degree j in R^m."""
    _check_spec(m, j, a)
    prefactor = pochhammer(j + 1, a) / pochhammer(m + 2 * j - 2, a)
    nu = Fraction(m, 2) + j - 1
    r2 = _radius_squared(m)
    x_m = CliffPoly.variable(m, m)
    total = CliffPoly.zero(m)
    for i in range(a // 2 + 1):
        t = a - 2 * i
        coeff = prefactor * (-1) ** i * pochhammer(nu, a - i) * 2**t / (factorial(i) * factorial(t))
        if not coeff:
            continue
        total = total + (x_m**t) * (r2**i) * coeff
    return total


@lru_cache(maxsize=None)
def vector_times_em(m: int) -> CliffPoly:
    """The bivector-valued polynomial (x_1 e_1 + ... + x_{m-1} e_{m-1}) e_m."""
    total = CliffPoly.zero(m)
    e_m = Multivector.basis_vector(m, m)
    for i in range(1, m):
        term = CliffPoly.variable(i, m).mul_left_const(Multivector.basis_vector(m, i))
        total = total + term.mul_right_const(e_m)
    return total


@lru_cache(maxsize=None)
def embedding_factor_X(m: int, j: int, a: int) -> CliffPoly:
    """Monogenic embedding factor of step a over degree j in R^m."""
    _check_spec(m, j, a)
    total = embedding_factor_F(m, j, a)
    if a >= 1:
        ratio = Fraction(j + 1, m + 2 * j - 1)
        total = total + embedding_factor_F(m, j + 1, a - 1) * vector_times_em(m) * ratio
    return total


def mu_constant(m: int, j: int, a: int) -> Fraction:
    """CK normalization: ck_extension((x e_m)^a P) = mu * X * P for monogenic P.

    The closed form carries the same prefactor (j+1)_a / (m+2j-2)_a that
    normalizes F; restricting the CK identity to x_m = 0 pins it down (for
    a = 1 it forces mu = (m+2j-1)/(j+1)), and the full grid is cross-checked
    against the CK extension in the test suite.
    """
    _check_spec(m, j, a)
    nu = Fraction(m, 2) + j - 1
    scale = pochhammer(m + 2 * j - 2, a) / pochhammer(j + 1, a)
    if a % 2 == 0:
        l = a // 2
        return scale * (-1) ** l / gegenbauer_at_zero(nu, 2 * l)
    l = (a - 1) // 2
    return scale * (-1) ** l * Fraction(m + 2 * j + 2 * l - 1, m + 2 * j - 2) / gegenbauer_at_zero(nu + 1, 2 * l)
