"""Exact inner products, generalized Taylor expansion and rank oracles.

Unit-ball integrals are computed through the Beta/Gamma closed form for
monomials; half-integer Gamma values reduce to rationals times sqrt(pi), and
for each dimension the net transcendental factor is exactly pi^floor(m/2).
An ExactBallValue therefore stores an exact multivector coefficient and the
symbolic pi power, so orthogonality is a zero test on rationals.

Taylor coefficients come from the Appell derivative chains: for a label with
degrees k_2 <= ... <= k_{m-1} <= k the operator applies d/dx_r exactly
(k_r - k_{r-1}) times for r = m..3 and finishes with k_2 applications of
the plane operator (the complex one for harmonics and spinor components,
the e_12 one for Clifford-valued monogenics); the coefficient is the value
at the origin divided by k!.  Everything here requires polynomial input.

The dimension oracles are deliberately naive: they row-reduce the Laplace or
Dirac operator on the raw monomial basis and report the exact kernel
dimension, independent of the basis construction they are used to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Union

import numpy as np

from . import linalg
from .bases import HarmLabel, MonoLabel, enumerate_labels, format_label, harmonic_element, monogenic_element, parse_label, spinor_element
from .clifford import DimensionMismatch, Multivector, _blade_product, spinor_components, spinor_generators
from .poly import CliffPoly, dirac_left, laplacian, partial_e12, partial_pm
from .scalars import GR_ZERO, GaussianRational, factorial

Label = Union[HarmLabel, MonoLabel]
TaylorKey = tuple  # (k, Label, nu-string or None)


def _gamma_half(p: int) -> tuple[Fraction, int]:
    """Gamma(p/2) for p >= 1 as (rational, power of sqrt(pi))."""
    if p % 2 == 0:
        return Fraction(factorial(p // 2 - 1)), 0
    n = (p - 1) // 2
    return Fraction(factorial(2 * n), 4**n * factorial(n)), 1


@lru_cache(maxsize=None)
def _ball_integral_fraction(m: int, alpha: tuple[int, ...]) -> Fraction:
    """integral of x^alpha over the unit ball, divided by pi^floor(m/2)."""
    if any(a % 2 for a in alpha):
        return Fraction(0)
    num = Fraction(1)
    sqrt_pi = 0
    for a in alpha:
        g, s = _gamma_half(a + 1)
        num *= g
        sqrt_pi += s
    den, s = _gamma_half(m + sum(alpha) + 2)
    sqrt_pi -= s
    if sqrt_pi != 2 * (m // 2):
        raise AssertionError("sqrt(pi) bookkeeping failed")  # unreachable
    return num / den


@dataclass
class ExactBallValue:
    """A ball integral as (exact multivector) * pi^floor(m/2)."""

    m: int
    coeff: Multivector

    @property
    def pi_power(self) -> int:
        return self.m // 2

    def __bool__(self) -> bool:
        return bool(self.coeff)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactBallValue):
            return NotImplemented
        return self.m == other.m and self.coeff == other.coeff

    def scalar_part(self) -> GaussianRational:
        return self.coeff.scalar_part()

    def approx(self) -> complex:
        return self.coeff.scalar_part().approx() * math.pi**self.pi_power

    def to_json(self) -> dict:
        return {"pi_power": self.pi_power, "coeff": self.coeff.to_json()}

    @classmethod
    def from_json(cls, data: dict, m: int | None = None) -> "ExactBallValue":
        coeff = Multivector.from_json(data["coeff"])
        if m is None:
            power = int(data["pi_power"])
            m = 2 * power  # either parity shares the power; prefer explicit m
        return cls(m, coeff)


def monomial_ball_integral(m: int, alpha) -> ExactBallValue:
    """Exact integral of the monomial x^alpha over the unit ball in R^m."""
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise ValueError(f"exponent vector {alpha} invalid for {m} variables")
    return ExactBallValue(m, Multivector.scalar(m, _ball_integral_fraction(m, alpha)))


def l2_inner(P: CliffPoly, Q: CliffPoly) -> ExactBallValue:
    """Clifford-valued L2 pairing over the unit ball: integral of conj(P)*Q."""
    if P.nvars != Q.nvars or P.alg != Q.alg:
        raise DimensionMismatch(
            f"({P.nvars} vars, C_{P.alg}) vs ({Q.nvars} vars, C_{Q.alg})"
        )
    m = P.nvars
    acc = Multivector.zero(P.alg)
    for ea, ca in P.terms.items():
        conj = ca.conjugate()
        for eb, cb in Q.terms.items():
            gamma = tuple(x + y for x, y in zip(ea, eb))
            if any(g % 2 for g in gamma):
                continue
            acc = acc + (conj * cb) * _ball_integral_fraction(m, gamma)
    return ExactBallValue(m, acc)


def fischer_inner(P: CliffPoly, Q: CliffPoly) -> Multivector:
    """Fischer duality pairing: sum over monomials of alpha! conj(a) b."""
    if P.nvars != Q.nvars or P.alg != Q.alg:
        raise DimensionMismatch(
            f"({P.nvars} vars, C_{P.alg}) vs ({Q.nvars} vars, C_{Q.alg})"
        )
    acc = Multivector.zero(P.alg)
    for exp, ca in P.terms.items():
        cb = Q.terms.get(exp)
        if cb is None:
            continue
        weight = 1
        for e in exp:
            weight *= factorial(e)
        acc = acc + (ca.conjugate() * cb) * weight
    return acc


def _conjugate_poly(P: CliffPoly) -> CliffPoly:
    return CliffPoly(P.nvars, {exp: c.conjugate() for exp, c in P.terms.items()}, alg=P.alg)


@dataclass
class TaylorTable:
    """Sparse table of generalized Taylor coefficients keyed by (k, label[, nu])."""

    entries: dict[TaylorKey, Multivector]

    def get(self, k: int, label: Label, nu: str | None = None) -> Multivector | None:
        return self.entries.get((k, label, nu))

    def items_sorted(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].chain, kv[0][2] or ""))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TaylorTable):
            return NotImplemented
        return self.entries == other.entries

    def to_json(self) -> list:
        out = []
        for (k, label, nu), coeff in self.items_sorted():
            entry = {"k": k, "mu": format_label(k, label)}
            if nu is not None:
                entry["nu"] = nu
            entry["coeff"] = coeff.to_json()
            out.append(entry)
        return out

    @classmethod
    def from_json(cls, data: list, kind: str) -> "TaylorTable":
        entries = {}
        for item in data:
            k, label = parse_label(item["mu"], "harmonic" if kind == "harmonic" else "monogenic")
            if k != int(item["k"]):
                raise ValueError(f"label {item['mu']!r} disagrees with k={item['k']}")
            nu = item.get("nu")
            entries[(k, label, nu)] = Multivector.from_json(item["coeff"])
        return cls(entries)


def _derivative_chain(g: CliffPoly, k: int, degrees: list[int], plane: str) -> CliffPoly:
    """Apply d_{x_m}^{k-k_{m-1}} ... d_{x_3}^{k_3-k_2} then the plane operator k_2 times.

    `degrees` is the ascending chain [k_2, ..., k_{m-1}, k]; `plane` selects
    '+'/'-' (complex derivative) or 'e12' (left bivector derivative).
    """
    out = g
    m = g.nvars
    for r in range(m, 2, -1):
        count = degrees[r - 2] - degrees[r - 3]
        for _ in range(count):
            out = out.partial(r)
            if not out:
                return out
    for _ in range(degrees[0]):
        out = partial_e12(out) if plane == "e12" else partial_pm(out, plane)
        if not out:
            return out
    return out


def _chain_coefficient(g: CliffPoly, k: int, degrees: list[int], plane: str) -> Multivector:
    reduced = _derivative_chain(g, k, degrees, plane)
    return reduced.constant_term() * Fraction(1, factorial(k))


def _spinor_component_polys(g: CliffPoly, chirality: str) -> dict[str, CliffPoly]:
    generators = spinor_generators(g.nvars, chirality)
    comps: dict[str, dict] = {nu: {} for nu in generators}
    for exp, coeff in g.terms.items():
        for nu, value in spinor_components(coeff, generators).items():
            if value:
                comps[nu][exp] = Multivector.scalar(g.alg, value)
    return {nu: CliffPoly(g.nvars, terms, alg=g.alg) for nu, terms in comps.items()}


def taylor_expand(g: CliffPoly, kind: str, chirality: str = "+") -> TaylorTable:
    """Generalized Taylor coefficients of a polynomial g up to its degree.

    kinds: 'harmonic' (complex-valued harmonic input, complex coefficients),
    'clifford' (monogenic input, right multivector coefficients), 'spinor'
    (monogenic spinor-valued input, complex coefficients per sign sequence).
    """
    m = g.nvars
    if m < 3:
        raise ValueError(f"Taylor expansion needs m >= 3, got {m}")
    entries: dict[TaylorKey, Multivector] = {}
    top = max(g.degree(), -1)
    if kind == "harmonic":
        if not g.is_scalar_valued():
            raise ValueError("input fails harmonicity (not complex-valued)")
        if laplacian(g):
            raise ValueError("input fails harmonicity")
        for k in range(top + 1):
            for label in enumerate_labels("harmonic", m, k):
                value = _chain_coefficient(g, k, label.degrees_ascending(k), label.sign)
                if value:
                    entries[(k, label, None)] = value
    elif kind == "clifford":
        if dirac_left(g):
            raise ValueError("input fails monogenicity")
        for k in range(top + 1):
            for label in enumerate_labels("monogenic", m, k):
                value = _chain_coefficient(g, k, label.degrees_ascending(k), "e12")
                if value:
                    entries[(k, label, None)] = value
    elif kind == "spinor":
        if dirac_left(g):
            raise ValueError("input fails monogenicity")
        components = _spinor_component_polys(g, chirality)
        for nu, part in components.items():
            if not part:
                continue
            sign = nu[-1]
            for k in range(part.degree() + 1):
                for label in enumerate_labels("monogenic", m, k):
                    value = _chain_coefficient(part, k, label.degrees_ascending(k), sign)
                    if value:
                        entries[(k, label, nu)] = value
    else:
        raise ValueError(f"unknown expansion kind {kind!r}")
    return TaylorTable(entries)


def reconstruct(table: TaylorTable, kind: str, m: int, chirality: str = "+", alg: int | None = None) -> CliffPoly:
    """Rebuild the polynomial from its Taylor table; inverse of taylor_expand."""
    if kind == "harmonic":
        alg = m if alg is None else alg
    elif kind in ("clifford", "spinor"):
        default = 2 * ((m + 1) // 2) if kind == "spinor" else m
        if alg is None:
            alg = max((c.m for c in table.entries.values()), default=default)
    else:
        raise ValueError(f"unknown expansion kind {kind!r}")
    total = CliffPoly.zero(m, alg)
    for (k, label, nu), coeff in table.items_sorted():
        if kind == "harmonic":
            if not isinstance(label, HarmLabel) or nu is not None:
                raise ValueError(f"unknown label {label} in harmonic table")
            label.validate(m, k)
            element = harmonic_element(m, k, label).embedded(alg=alg)
        elif kind == "clifford":
            if not isinstance(label, MonoLabel) or nu is not None:
                raise ValueError(f"unknown label {label} in Clifford table")
            label.validate(m, k)
            element = monogenic_element(m, k, label).embedded(alg=alg)
        else:
            if not isinstance(label, MonoLabel) or nu is None:
                raise ValueError(f"unknown label {label} in spinor table")
            label.validate(m, k)
            element = spinor_element(m, k, label, nu, chirality)
            if element.alg != alg:
                element = element.embedded(alg=alg)
        total = total + element.mul_right_const(coeff.embedded(alg))
    return total


def coefficient_relation_check(g: CliffPoly, chirality: str = "+") -> bool:
    """Clifford coefficients equal the nu-weighted sums of spinor coefficients."""
    clifford_table = taylor_expand(g, "clifford")
    spinor_table = taylor_expand(g, "spinor", chirality)
    generators = spinor_generators(g.nvars, chirality)
    keys = {(k, label) for (k, label, _) in clifford_table.entries}
    keys |= {(k, label) for (k, label, _) in spinor_table.entries}
    for k, label in keys:
        lhs = clifford_table.get(k, label) or Multivector.zero(g.alg)
        rhs = Multivector.zero(g.alg)
        for nu, generator in generators.items():
            value = spinor_table.get(k, label, nu)
            if value is not None:
                rhs = rhs + generator * value.scalar_part()
        if lhs != rhs:
            return False
    return True


def _monomials(m: int, k: int) -> list[tuple[int, ...]]:
    if m == 1:
        return [(k,)]
    out = []
    for first in range(k, -1, -1):
        for rest in _monomials(m - 1, k - first):
            out.append((first,) + rest)
    return out


def dimension_oracle(space: str, m: int, k: int) -> int:
    """Brute-force kernel dimension of the Laplacian or Dirac operator.

    'harmonic' counts complex harmonic k-homogeneous polynomials in R^m;
    'monogenic' counts the complex dimension of the Dirac kernel on
    C_m-valued k-homogeneous polynomials (the right-module rank times 2^m).
    """
    if m < 2 or k < 0:
        raise ValueError(f"need m >= 2 and k >= 0, got m={m}, k={k}")
    cols = _monomials(m, k)
    col_index = {alpha: i for i, alpha in enumerate(cols)}
    if space == "harmonic":
        if k < 2:
            return len(cols)
        rows: dict[tuple, dict[int, int]] = {}
        for alpha, c in col_index.items():
            for i in range(m):
                if alpha[i] >= 2:
                    beta = alpha[:i] + (alpha[i] - 2,) + alpha[i + 1 :]
                    rows.setdefault(beta, {})[c] = rows.get(beta, {}).get(c, 0) + alpha[i] * (alpha[i] - 1)
        return len(cols) - linalg.sparse_int_rank(list(rows.values()))
    if space == "monogenic":
        blades = sorted(b for r in range(m + 1) for b in combinations(range(1, m + 1), r))
        blade_index = {b: i for i, b in enumerate(blades)}
        nblades = len(blades)
        if k == 0:
            return nblades
        rows = {}
        for alpha, c in col_index.items():
            for i in range(m):
                if alpha[i] == 0:
                    continue
                beta = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1 :]
                for blade, bi in blade_index.items():
                    sign, target = _blade_product((i + 1,), blade)
                    key = (beta, target)
                    col = c * nblades + bi
                    row = rows.setdefault(key, {})
                    row[col] = row.get(col, 0) + sign * alpha[i]
        ncols = len(cols) * nblades
        return ncols - linalg.sparse_int_rank(list(rows.values()))
    raise ValueError(f"unknown space {space!r}")


def sample_unit_ball(m: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform samples from the unit ball by rejection from the cube."""
    chunks = []
    total = 0
    while total < count:
        candidate = rng.uniform(-1.0, 1.0, size=(max(count, 1024), m))
        inside = candidate[(candidate**2).sum(axis=1) <= 1.0]
        chunks.append(inside)
        total += len(inside)
    return np.concatenate(chunks)[:count]


def _ball_volume(m: int) -> float:
    return math.pi ** (m / 2) / math.gamma(m / 2 + 1)


def l2_inner_monte_carlo(P: CliffPoly, Q: CliffPoly, samples: int = 1_000_000, seed: int = 0):
    """Float estimate of l2_inner per blade: {blade: (est, se)} with complex est.

    `se` holds the standard errors of the real and imaginary parts.  This is
    a cross-check of the exact Gamma-formula path, never a computation path.
    """
    if P.nvars != Q.nvars or P.alg != Q.alg:
        raise DimensionMismatch("mismatched operands")
    m = P.nvars
    integrand = _conjugate_poly(P) * Q
    rng = np.random.default_rng(seed)
    points = sample_unit_ball(m, samples, rng)
    volume = _ball_volume(m)
    power_cache: dict[tuple[int, int], np.ndarray] = {}

    def powers(axis: int, e: int) -> np.ndarray:
        key = (axis, e)
        if key not in power_cache:
            power_cache[key] = points[:, axis] ** e
        return power_cache[key]

    by_blade: dict[tuple[int, ...], list] = {}
    for exp, coeff in integrand.terms.items():
        for blade, value in coeff.terms.items():
            by_blade.setdefault(blade, []).append((exp, value.approx()))
    results = {}
    for blade, terms in sorted(by_blade.items()):
        values = np.zeros(samples, dtype=complex)
        for exp, cval in terms:
            mono = np.ones(samples)
            for axis, e in enumerate(exp):
                if e:
                    mono = mono * powers(axis, e)
            values = values + cval * mono
        est_re = volume * float(values.real.mean())
        est_im = volume * float(values.imag.mean())
        se_re = volume * float(values.real.std(ddof=1)) / math.sqrt(samples)
        se_im = volume * float(values.imag.std(ddof=1)) / math.sqrt(samples)
        results[blade] = (complex(est_re, est_im), (se_re, se_im))
    return results


def monte_carlo_consistent(P: CliffPoly, Q: CliffPoly, samples: int = 1_000_000, seed: int = 0, nsigma: float = 3.0) -> bool:
    """True when the Monte Carlo estimate matches the exact value within nsigma."""
    exact = l2_inner(P, Q)
    estimates = l2_inner_monte_carlo(P, Q, samples=samples, seed=seed)
    pi_factor = math.pi**exact.pi_power
    blades = set(estimates) | set(exact.coeff.terms)
    for blade in blades:
        est, (se_re, se_im) = estimates.get(blade, (0j, (0.0, 0.0)))
        value = exact.coeff.terms.get(blade, GR_ZERO)
        target_re = float(value.re) * pi_factor
        target_im = float(value.im) * pi_factor
        scale = 1e-12 * max(1.0, abs(target_re), abs(target_im))
        if abs(est.real - target_re) > nsigma * se_re + scale:
            return False
        if abs(est.imag - target_im) > nsigma * se_im + scale:
            return False
    return True
