"""Named verification routines shared by the CLI `check` command and tests.

Every check returns (passed, lines); lines are human-readable one-liners.
All comparisons are exact: a check passes only when the relevant identity
holds with zero tolerance in rational arithmetic.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .analysis import (
    _derivative_chain,
    coefficient_relation_check,
    dimension_oracle,
    fischer_inner,
    l2_inner,
)
from .bases import (
    enumerate_labels,
    format_label,
    harmonic_element,
    monogenic_element,
    spinor_element,
    vector_em_poly,
)
from .clifford import Multivector, spinor_generators
from .factors import embedding_factor_X, mu_constant
from .poly import CliffPoly, ck_extension, dirac_left, laplacian
from .scalars import GaussianRational, factorial

CHECK_NAMES = ("appell", "orthogonality", "monogenicity", "ck", "dimensions", "coeff-relation")


def _basis_with_labels(space: str, m: int, k: int, chirality: str):
    if space == "harmonic":
        return [(format_label(k, lab), lab, None, harmonic_element(m, k, lab)) for lab in enumerate_labels("harmonic", m, k)]
    if space == "clifford":
        return [(format_label(k, lab), lab, None, monogenic_element(m, k, lab)) for lab in enumerate_labels("monogenic", m, k)]
    if space == "spinor":
        out = []
        for lab in enumerate_labels("monogenic", m, k):
            for nu in enumerate_labels("spinor", m, k):
                out.append((f"{format_label(k, lab)};{nu}", lab, nu, spinor_element(m, k, lab, nu, chirality)))
        return out
    raise ValueError(f"unknown space {space!r}")


def check_appell(space: str, m: int, kmax: int, chirality: str = "+") -> tuple[bool, list[str]]:
    """Derivative chains hit k! (times v^nu for spinors) and the x_m ladder steps down."""
    lines = []
    ok = True
    generators = spinor_generators(m, chirality) if space == "spinor" else None
    for k in range(kmax + 1):
        for name, label, nu, element in _basis_with_labels(space, m, k, chirality):
            degrees = label.degrees_ascending(k)
            if space == "harmonic":
                plane = label.sign
                target = CliffPoly.constant(m, factorial(k))
            elif space == "clifford":
                plane = "e12"
                target = CliffPoly.constant(m, factorial(k))
            else:
                plane = nu[-1]
                target = CliffPoly.constant(m, Multivector.scalar(element.alg, factorial(k)) * generators[nu], alg=element.alg)
            # The chain must collapse the whole polynomial to the constant k!.
            chain_ok = _derivative_chain(element, k, degrees, plane) == target
            ladder_ok = True
            if space in ("harmonic", "clifford"):
                k_prev = degrees[-2]  # k_{m-1}
                stepped = element.partial(m)
                if k == k_prev:
                    ladder_ok = not stepped
                else:
                    builder = harmonic_element if space == "harmonic" else monogenic_element
                    ladder_ok = stepped == builder(m, k - 1, label) * k
            if not (chain_ok and ladder_ok):
                ok = False
                lines.append(f"FAIL appell {space} m={m} {name}: chain={chain_ok} ladder={ladder_ok}")
    lines.append(f"appell {space} m={m} k<={kmax}: {'ok' if ok else 'FAILED'}")
    return ok, lines


def check_monogenicity(space: str, m: int, kmax: int, chirality: str = "+") -> tuple[bool, list[str]]:
    """Every basis element is annihilated by its defining operator, exactly."""
    lines = []
    ok = True
    for k in range(kmax + 1):
        for name, _, _, element in _basis_with_labels(space, m, k, chirality):
            residue = laplacian(element) if space == "harmonic" else dirac_left(element)
            if residue:
                ok = False
                lines.append(f"FAIL kernel {space} m={m} {name}: nonzero residue")
    operator = "laplacian" if space == "harmonic" else "dirac"
    lines.append(f"{operator} kernel {space} m={m} k<={kmax}: {'ok' if ok else 'FAILED'}")
    return ok, lines


def check_orthogonality(space: str, m: int, kmax: int, chirality: str = "+") -> tuple[bool, list[str]]:
    """Gram off-diagonals vanish: L2 for harmonic/clifford, Fischer scalar part for spinor."""
    lines = []
    ok = True
    elements = []
    for k in range(kmax + 1):
        elements.extend(_basis_with_labels(space, m, k, chirality))
    scalar_only = 0
    for i in range(len(elements)):
        name_i, _, _, p = elements[i]
        for j in range(i + 1, len(elements)):
            name_j, _, _, q = elements[j]
            if space == "spinor":
                value = fischer_inner(p, q)
                if value.scalar_part():
                    ok = False
                    lines.append(f"FAIL fischer orthogonality m={m}: <{name_i},{name_j}> scalar part nonzero")
            else:
                value = l2_inner(p, q)
                if value:
                    ok = False
                    if not value.coeff.scalar_part():
                        scalar_only += 1
                        lines.append(
                            f"DIAG L2 orthogonality m={m}: <{name_i},{name_j}> vanishes in scalar part only"
                        )
                    else:
                        lines.append(f"FAIL L2 orthogonality m={m}: <{name_i},{name_j}> nonzero")
    pair_count = len(elements) * (len(elements) - 1) // 2
    lines.append(f"orthogonality {space} m={m} k<={kmax}: {pair_count} pairs, {'ok' if ok else 'FAILED'}")
    return ok, lines


def check_ck(m: int, total: int) -> tuple[bool, list[str]]:
    """CK extension of (x e_m)^a P reproduces mu * X * P on basis monogenics."""
    from .bases import monogenic_space_basis

    lines = []
    ok = True
    xem = vector_em_poly(m - 1, m, m)
    for j in range(total + 1):
        basis = [p.embedded(alg=m) for p in monogenic_space_basis(m - 1, j)]
        for a in range(total - j + 1):
            lift = embedding_factor_X(m, j, a)
            mu = mu_constant(m, j, a)
            prefix = xem**a
            for idx, p in enumerate(basis):
                lhs = ck_extension(prefix * p, m)
                rhs = (lift * p.embedded(nvars=m)) * mu
                if lhs != rhs:
                    ok = False
                    lines.append(f"FAIL ck m={m} j={j} a={a} basis#{idx}")
    lines.append(f"ck identity m={m} a+j<={total}: {'ok' if ok else 'FAILED'}")
    return ok, lines


def check_dimensions(space: str, m: int, kmax: int) -> tuple[bool, list[str]]:
    """Label counts against the brute-force kernel ranks."""
    lines = []
    ok = True
    for k in range(kmax + 1):
        if space == "harmonic":
            expected = len(enumerate_labels("harmonic", m, k))
            actual = dimension_oracle("harmonic", m, k)
            line = f"dim harmonics m={m} k={k}: labels={expected} kernel={actual}"
        else:
            expected = len(enumerate_labels("monogenic", m, k)) * 2**m
            actual = dimension_oracle("monogenic", m, k)
            line = f"dim monogenics m={m} k={k}: labels*2^m={expected} kernel={actual}"
        if expected != actual:
            ok = False
            line += " MISMATCH"
        lines.append(line)
    lines.append(f"dimensions {space} m={m} k<={kmax}: {'ok' if ok else 'FAILED'}")
    return ok, lines


def _random_gaussian_rational(rng: random.Random) -> GaussianRational:
    def frac():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    return GaussianRational(frac(), frac() if rng.random() < 0.5 else 0)


def random_basis_combination(kind: str, m: int, max_degree: int, rng: random.Random, chirality: str = "+") -> CliffPoly:
    """Random rational combination of basis elements (right coefficients for Clifford)."""
    if kind == "harmonic":
        total = CliffPoly.zero(m)
        for k in range(max_degree + 1):
            for label in enumerate_labels("harmonic", m, k):
                if rng.random() < 0.6:
                    total = total + harmonic_element(m, k, label) * _random_gaussian_rational(rng)
        return total
    if kind == "clifford":
        total = CliffPoly.zero(m)
        blades = [(), (1,), (1, 2), (2, 3) if m >= 3 else (1, 2)]
        for k in range(max_degree + 1):
            for label in enumerate_labels("monogenic", m, k):
                if rng.random() < 0.6:
                    coeff = Multivector.blade(m, rng.choice(blades), _random_gaussian_rational(rng))
                    total = total + monogenic_element(m, k, label).mul_right_const(coeff)
        return total
    if kind == "spinor":
        alg = 2 * ((m + 1) // 2)
        total = CliffPoly.zero(m, alg)
        for k in range(max_degree + 1):
            for label in enumerate_labels("monogenic", m, k):
                for nu in enumerate_labels("spinor", m, k):
                    if rng.random() < 0.5:
                        total = total + spinor_element(m, k, label, nu, chirality) * _random_gaussian_rational(rng)
        return total
    raise ValueError(f"unknown kind {kind!r}")


def check_coeff_relation(m: int, kmax: int, chirality: str = "+", trials: int = 5, seed: int = 0) -> tuple[bool, list[str]]:
    """Clifford-kind Taylor coefficients equal nu-weighted spinor sums on random inputs."""
    rng = random.Random(seed)
    lines = []
    ok = True
    for trial in range(trials):
        g = random_basis_combination("spinor", m, kmax, rng, chirality)
        if not coefficient_relation_check(g, chirality):
            ok = False
            lines.append(f"FAIL coeff-relation m={m} trial={trial}")
    lines.append(f"coeff-relation m={m} k<={kmax} trials={trials}: {'ok' if ok else 'FAILED'}")
    return ok, lines


def run_check(name: str, space: str, m: int, k: int, chirality: str = "+") -> tuple[bool, list[str]]:
    """Dispatch a named verification; `k` bounds the degree (or a+j for ck)."""
    if name == "appell":
        return check_appell(space, m, k, chirality)
    if name == "orthogonality":
        return check_orthogonality(space, m, k, chirality)
    if name == "monogenicity":
        return check_monogenicity(space, m, k, chirality)
    if name == "ck":
        return check_ck(m, k)
    if name == "dimensions":
        return check_dimensions(space, m, k)
    if name == "coeff-relation":
        return check_coeff_relation(m, k, chirality)
    raise ValueError(f"unknown check {name!r}; expected one of {', '.join(CHECK_NAMES)}")
