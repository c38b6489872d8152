"""Gelfand-Tsetlin labels and the three orthogonal Appell basis families.

A label is the chain of degrees picked up while branching down one dimension
at a time.  Harmonic labels carry a sign on the final degree, encoding which
of (x_1 - i x_2)^{k_2} / (x_1 + i x_2)^{k_2} seeds the chain; the sign
convention is locked in one place: label sign s pairs with the seed
(x_1 - s*i*x_2)^{k_2} and with the derivative (d_1 + s*i*d_2)/2.  Monogenic
chains are unsigned and seed with (x_1 - e_12 x_2)^{k_2}.

Basis elements are products of embedding factors over the chain; the
monogenic product is ordered from dimension m down to 3 because the algebra
does not commute.  The branching and Fischer decompositions are computed by
exact linear solves against constructed spanning sets, which the cited
uniqueness makes square and nonsingular.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .clifford import Multivector, spin_labels, spinor_generators
from .factors import embedding_factor_F, embedding_factor_X
from .poly import CliffPoly, is_harmonic, laplacian
from .scalars import GR_ONE, GaussianRational


@dataclass(frozen=True, order=True)
class HarmLabel:
    """Harmonic chain (k_{m-1},...,k_3, s*k_2); the sign rides on the last entry."""

    chain: tuple[int, ...]

    def __post_init__(self):
        if not self.chain:
            raise ValueError("harmonic label chain cannot be empty")

    @property
    def k2(self) -> int:
        return abs(self.chain[-1])

    @property
    def sign(self) -> str:
        return "-" if self.chain[-1] < 0 else "+"

    def validate(self, m: int, k: int):
        if len(self.chain) != m - 2:
            raise ValueError(f"label {self} has wrong length for m={m}")
        seq = list(self.chain[:-1]) + [abs(self.chain[-1])]
        if any(x < 0 for x in seq) or any(a < b for a, b in zip([k] + seq, seq)):
            raise ValueError(f"label {self} is not a weakly decreasing chain under k={k}")

    def degrees_ascending(self, k: int) -> list[int]:
        """[k_2, k_3, ..., k_{m-1}, k]."""
        return [abs(self.chain[-1])] + list(reversed(self.chain[:-1])) + [k]


@dataclass(frozen=True, order=True)
class MonoLabel:
    """Monogenic chain (k_{m-1},...,k_2), weakly decreasing and nonnegative."""

    chain: tuple[int, ...]

    def __post_init__(self):
        if not self.chain:
            raise ValueError("monogenic label chain cannot be empty")

    @property
    def k2(self) -> int:
        return self.chain[-1]

    def validate(self, m: int, k: int):
        if len(self.chain) != m - 2:
            raise ValueError(f"label {self} has wrong length for m={m}")
        seq = list(self.chain)
        if any(x < 0 for x in seq) or any(a < b for a, b in zip([k] + seq, seq)):
            raise ValueError(f"label {self} is not a weakly decreasing chain under k={k}")

    def degrees_ascending(self, k: int) -> list[int]:
        return list(reversed(self.chain)) + [k]


def format_label(k: int, label: HarmLabel | MonoLabel) -> str:
    return f"{k}|" + ",".join(str(c) for c in label.chain)


def parse_label(text: str, kind: str) -> tuple[int, HarmLabel | MonoLabel]:
    try:
        head, tail = text.split("|", 1)
        k = int(head)
        chain = tuple(int(c) for c in tail.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed label {text!r}") from exc
    if kind == "harmonic":
        return k, HarmLabel(chain)
    if kind in ("monogenic", "clifford", "spinor"):
        return k, MonoLabel(chain)
    raise ValueError(f"unknown label kind {kind!r}")


def _descending_chains(length: int, bound: int):
    if length == 0:
        yield ()
        return
    for top in range(bound + 1):
        for rest in _descending_chains(length - 1, top):
            yield (top,) + rest


def enumerate_labels(kind: str, m: int, k: int) -> list:
    """All labels of the given kind in deterministic lexicographic order."""
    if m < 3:
        raise ValueError(f"labels need m >= 3, got {m}")
    if k < 0:
        raise ValueError(f"degree must be nonnegative, got {k}")
    if kind == "spinor":
        return spin_labels(m)
    if kind == "harmonic":
        labels = []
        for chain in _descending_chains(m - 2, k):
            if chain[-1] == 0:
                labels.append(HarmLabel(chain))
            else:
                labels.append(HarmLabel(chain))
                labels.append(HarmLabel(chain[:-1] + (-chain[-1],)))
        return sorted(labels)
    if kind in ("monogenic", "clifford"):
        return sorted(MonoLabel(chain) for chain in _descending_chains(m - 2, k))
    raise ValueError(f"unknown label kind {kind!r}")


def plane_harmonic_seed(m: int, k2: int, sign: str, alg: int | None = None) -> CliffPoly:
    """(x_1 - s*i*x_2)^{k2} as a polynomial in m variables."""
    unit = GaussianRational(0, -1 if sign == "+" else 1)
    x1 = CliffPoly.variable(1, m, alg)
    x2 = CliffPoly.variable(2, m, alg)
    return (x1 + x2 * unit) ** k2


def plane_monogenic_seed(m: int, k2: int, alg: int | None = None) -> CliffPoly:
    """(x_1 - e_12 x_2)^{k2} as a polynomial in m variables."""
    alg = m if alg is None else alg
    x1 = CliffPoly.variable(1, m, alg)
    x2 = CliffPoly.variable(2, m, alg)
    e12 = Multivector.blade(alg, (1, 2))
    return (x1 - x2.mul_left_const(e12)) ** k2


def harmonic_element(m: int, k: int, label: HarmLabel) -> CliffPoly:
    """Basis harmonic h_{k,label}: plane seed times the F-factor chain."""
    label.validate(m, k)
    degrees = label.degrees_ascending(k)  # k_2 .. k_m
    total = plane_harmonic_seed(m, label.k2, label.sign)
    for r in range(3, m + 1):
        j = degrees[r - 3]
        a = degrees[r - 2] - j
        total = total * embedding_factor_F(r, j, a).embedded(nvars=m, alg=m)
    return total


def monogenic_element(m: int, k: int, label: MonoLabel) -> CliffPoly:
    """Basis monogenic f_{k,label}: X factors from dimension m down to the seed."""
    label.validate(m, k)
    degrees = label.degrees_ascending(k)
    total = CliffPoly.constant(m, GR_ONE)
    for r in range(m, 2, -1):
        j = degrees[r - 3]
        a = degrees[r - 2] - j
        total = total * embedding_factor_X(r, j, a).embedded(nvars=m, alg=m)
    return total * plane_monogenic_seed(m, label.k2)


def spinor_element(m: int, k: int, label: MonoLabel, nu: str, chirality: str = "+") -> CliffPoly:
    """f_{k,label} right-multiplied by the spinor generator v^nu."""
    generators = spinor_generators(m, chirality)
    if nu not in generators:
        raise ValueError(f"unknown spinor label {nu!r} for m={m}")
    alg = 2 * ((m + 1) // 2)
    f = monogenic_element(m, k, label).embedded(alg=alg)
    return f.mul_right_const(generators[nu])


def harmonic_space_basis(m: int, k: int) -> list[CliffPoly]:
    """A basis of the k-homogeneous harmonics in R^m; m = 2 seeds the recursion."""
    if m >= 3:
        return [harmonic_element(m, k, label) for label in enumerate_labels("harmonic", m, k)]
    if m == 2:
        if k == 0:
            return [CliffPoly.constant(2, GR_ONE)]
        return [plane_harmonic_seed(2, k, "+"), plane_harmonic_seed(2, k, "-")]
    raise ValueError(f"no harmonic basis for m={m}")


def monogenic_space_basis(m: int, k: int) -> list[CliffPoly]:
    """A right-module basis of the k-homogeneous monogenics in R^m."""
    if m >= 3:
        return [monogenic_element(m, k, label) for label in enumerate_labels("monogenic", m, k)]
    if m == 2:
        return [plane_monogenic_seed(2, k)]
    raise ValueError(f"no monogenic basis for m={m}")


def _scalar_coordinates(p: CliffPoly) -> dict:
    return {exp: coeff.scalar_part() for exp, coeff in p.terms.items()}


def _full_coordinates(p: CliffPoly) -> dict:
    coords = {}
    for exp, coeff in p.terms.items():
        for blade, value in coeff.terms.items():
            coords[(exp, blade)] = value
    return coords


def branch_decompose_harmonic(P: CliffPoly, k: int | None = None) -> list[CliffPoly]:
    """Split a harmonic k-homogeneous P in R^m along the F-factor branching.

    Returns [P_0, ..., P_k] with P = sum_j F_{m,j}^{(k-j)} P_j and each P_j a
    j-homogeneous harmonic in R^{m-1}.  The decomposition is unique, so a
    singular solve signals an implementation bug rather than bad data.
    """
    m = P.nvars
    if m < 3:
        raise ValueError(f"branching needs m >= 3, got {m}")
    if not P.is_scalar_valued():
        raise ValueError("branching applies to complex-valued harmonics")
    if k is None:
        k = max(P.degree(), 0)
    if P and not P.is_homogeneous(k):
        raise ValueError(f"input is not {k}-homogeneous")
    if laplacian(P):
        raise ValueError("input fails harmonicity")
    if not P:
        return [CliffPoly.zero(m - 1) for _ in range(k + 1)]
    columns = []
    layout = []  # (j, index into the basis of layer j)
    layer_bases = [harmonic_space_basis(m - 1, j) for j in range(k + 1)]
    for j, basis in enumerate(layer_bases):
        lift = embedding_factor_F(m, j, k - j)
        for idx, element in enumerate(basis):
            columns.append(_scalar_coordinates(lift * element.embedded(nvars=m, alg=m)))
            layout.append((j, idx))
    solution = linalg.solve_columns(columns, _scalar_coordinates(P))
    if solution is None:
        raise RuntimeError("branching solve inconsistent on a harmonic input (bug)")
    components = [CliffPoly.zero(m - 1) for _ in range(k + 1)]
    for (j, idx), coeff in zip(layout, solution):
        if coeff:
            components[j] = components[j] + layer_bases[j][idx] * coeff
    return components


def _all_blades(alg: int) -> list[tuple[int, ...]]:
    blades = []
    for r in range(alg + 1):
        blades.extend(combinations(range(1, alg + 1), r))
    return sorted(blades)


def vector_em_poly(d: int, m: int, alg: int) -> CliffPoly:
    """(x_1 e_1 + ... + x_d e_d) e_m as a polynomial in d variables."""
    e_m = Multivector.basis_vector(alg, m)
    total = CliffPoly.zero(d, alg)
    for i in range(1, d + 1):
        total = total + CliffPoly.variable(i, d, alg).mul_left_const(Multivector.basis_vector(alg, i) * e_m)
    return total


def fischer_decompose(P: CliffPoly, m: int | None = None) -> list[tuple[int, CliffPoly]]:
    """Split a k-homogeneous P over R^{m-1} as sum_j (x e_m)^{k-j} M_j.

    Each M_j is monogenic and j-homogeneous; the right-module coefficients
    are recovered by an exact linear solve over all monogenic-basis-times-
    blade columns.
    """
    d = P.nvars
    m = d + 1 if m is None else m
    if m != d + 1:
        raise ValueError(f"polynomial in {d} variables decomposes under m={d + 1}")
    if not P.is_homogeneous():
        raise ValueError("input is not homogeneous")
    alg = max(P.alg, m)
    k = max(P.degree(), 0)
    if not P:
        return [(j, CliffPoly.zero(d, alg)) for j in range(k + 1)]
    xem = vector_em_poly(d, m, alg)
    blades = _all_blades(alg)
    columns = []
    layout = []  # (j, basis index, blade)
    layer_bases = [[b.embedded(alg=alg) for b in monogenic_space_basis(d, j)] for j in range(k + 1)]
    for j, basis in enumerate(layer_bases):
        prefix = xem ** (k - j)
        for idx, element in enumerate(basis):
            lifted = prefix * element
            for blade in blades:
                col = lifted.mul_right_const(Multivector.blade(alg, blade))
                columns.append(_full_coordinates(col))
                layout.append((j, idx, blade))
    solution = linalg.solve_columns(columns, _full_coordinates(P.embedded(alg=alg)))
    if solution is None:
        raise RuntimeError("Fischer solve inconsistent on a homogeneous input (bug)")
    parts = [CliffPoly.zero(d, alg) for _ in range(k + 1)]
    for (j, idx, blade), coeff in zip(layout, solution):
        if coeff:
            parts[j] = parts[j] + layer_bases[j][idx].mul_right_const(Multivector.blade(alg, blade, coeff))
    return [(j, parts[j]) for j in range(k + 1)]
