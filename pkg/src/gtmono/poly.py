"""Clifford-valued multivariate polynomials with exact coefficients.

A CliffPoly is a sparse map from exponent vectors to multivector
coefficients.  The number of variables (`nvars`) and the dimension of the
coefficient algebra (`alg`) are tracked separately: spinor-valued
polynomials in an odd number of variables carry coefficients in the next
even-dimensional algebra.

Operator conventions.  The algebra acts on the left throughout: the Dirac
operator is sum_i e_i d/dx_i with left multiplication, and the plane
operators are

    partial_pm(p, s)  = (d/dx_1 + s*i*d/dx_2) / 2
    partial_e12(p)    = (d/dx_1 + e_12 * d/dx_2) / 2

Taylor coefficients in the Clifford-valued expansion attach on the right.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple

from .clifford import DimensionMismatch, Multivector
from .scalars import GR_ONE, GaussianRational, factorial

Exponents = Tuple[int, ...]


def _add_exponents(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


class CliffPoly:
    """Polynomial in x_1..x_nvars with Multivector coefficients.

    Instances are immutable by convention; `terms` must never be mutated.
    """

    __slots__ = ("nvars", "alg", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Multivector] | Iterable = (), alg: int | None = None):
        if nvars < 1:
            raise ValueError(f"need at least one variable, got {nvars}")
        alg = nvars if alg is None else alg
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponents, Multivector] = {}
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"exponent vector {exp} invalid for {nvars} variables")
            if not isinstance(coeff, Multivector):
                coeff = Multivector.scalar(alg, coeff)
            if coeff.m != alg:
                raise DimensionMismatch(f"coefficient in C_{coeff.m}, expected C_{alg}")
            if coeff:
                prev = clean.get(exp)
                total = coeff if prev is None else prev + coeff
                if total:
                    clean[exp] = total
                elif exp in clean:
                    del clean[exp]
        self.nvars = nvars
        self.alg = alg
        self.terms = clean

    @classmethod
    def _make(cls, nvars: int, alg: int, terms: dict[Exponents, Multivector]) -> "CliffPoly":
        out = object.__new__(cls)
        out.nvars = nvars
        out.alg = alg
        out.terms = terms
        return out

    @classmethod
    def zero(cls, nvars: int, alg: int | None = None) -> "CliffPoly":
        return cls._make(nvars, nvars if alg is None else alg, {})

    @classmethod
    def constant(cls, nvars: int, value, alg: int | None = None) -> "CliffPoly":
        alg = nvars if alg is None else alg
        coeff = value if isinstance(value, Multivector) else Multivector.scalar(alg, value)
        if coeff.m != alg:
            raise DimensionMismatch(f"constant in C_{coeff.m}, expected C_{alg}")
        zero = (0,) * nvars
        return cls._make(nvars, alg, {zero: coeff} if coeff else {})

    @classmethod
    def variable(cls, i: int, nvars: int, alg: int | None = None) -> "CliffPoly":
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        alg = nvars if alg is None else alg
        exp = tuple(1 if j == i else 0 for j in range(1, nvars + 1))
        return cls._make(nvars, alg, {exp: Multivector.scalar(alg, GR_ONE)})

    def _check_compatible(self, other: "CliffPoly"):
        if self.nvars != other.nvars or self.alg != other.alg:
            raise DimensionMismatch(
                f"({self.nvars} vars, C_{self.alg}) vs ({other.nvars} vars, C_{other.alg})"
            )

    def __add__(self, other):
        if not isinstance(other, CliffPoly):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self.terms)
        for exp, coeff in other.terms.items():
            cur = acc.get(exp)
            total = coeff if cur is None else cur + coeff
            if total:
                acc[exp] = total
            elif exp in acc:
                del acc[exp]
        return CliffPoly._make(self.nvars, self.alg, acc)

    def __sub__(self, other):
        if not isinstance(other, CliffPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CliffPoly._make(self.nvars, self.alg, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        """Noncommutative product; coefficients multiply left factor first."""
        if isinstance(other, CliffPoly):
            self._check_compatible(other)
            acc: dict[Exponents, Multivector] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    exp = _add_exponents(ea, eb)
                    coeff = ca * cb
                    if not coeff:
                        continue
                    cur = acc.get(exp)
                    total = coeff if cur is None else cur + coeff
                    if total:
                        acc[exp] = total
                    elif exp in acc:
                        del acc[exp]
            return CliffPoly._make(self.nvars, self.alg, acc)
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return NotImplemented
        if not scalar:
            return CliffPoly.zero(self.nvars, self.alg)
        return CliffPoly._make(self.nvars, self.alg, {e: c * scalar for e, c in self.terms.items()})

    def __rmul__(self, other):
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return NotImplemented
        return self * scalar

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a natural number, got {n!r}")
        result = CliffPoly.constant(self.nvars, GR_ONE, self.alg)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_left_const(self, value) -> "CliffPoly":
        """Left-multiply every coefficient by a constant multivector."""
        const = value if isinstance(value, Multivector) else Multivector.scalar(self.alg, value)
        if const.m != self.alg:
            raise DimensionMismatch(f"constant in C_{const.m}, expected C_{self.alg}")
        acc = {}
        for exp, coeff in self.terms.items():
            c = const * coeff
            if c:
                acc[exp] = c
        return CliffPoly._make(self.nvars, self.alg, acc)

    def mul_right_const(self, value) -> "CliffPoly":
        """Right-multiply every coefficient by a constant multivector."""
        const = value if isinstance(value, Multivector) else Multivector.scalar(self.alg, value)
        if const.m != self.alg:
            raise DimensionMismatch(f"constant in C_{const.m}, expected C_{self.alg}")
        acc = {}
        for exp, coeff in self.terms.items():
            c = coeff * const
            if c:
                acc[exp] = c
        return CliffPoly._make(self.nvars, self.alg, acc)

    def partial(self, i: int) -> "CliffPoly":
        """Formal partial derivative with respect to x_i (1-based)."""
        if not 1 <= i <= self.nvars:
            raise ValueError(f"axis {i} out of range 1..{self.nvars}")
        acc = {}
        for exp, coeff in self.terms.items():
            e = exp[i - 1]
            if e == 0:
                continue
            lowered = exp[: i - 1] + (e - 1,) + exp[i:]
            c = coeff * e
            cur = acc.get(lowered)
            acc[lowered] = c if cur is None else cur + c
        return CliffPoly._make(self.nvars, self.alg, {e: c for e, c in acc.items() if c})

    def evaluate(self, point: Sequence) -> Multivector:
        """Exact substitution of a rational point."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} entries, expected {self.nvars}")
        values = [v if isinstance(v, GaussianRational) else GaussianRational(v) for v in point]
        total = Multivector.zero(self.alg)
        for exp, coeff in self.terms.items():
            scale = GR_ONE
            for v, e in zip(values, exp):
                for _ in range(e):
                    scale = scale * v
            total = total + coeff * scale
        return total

    def constant_term(self) -> Multivector:
        return self.terms.get((0,) * self.nvars, Multivector.zero(self.alg))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return k is None or degrees == {k}

    def is_scalar_valued(self) -> bool:
        return all(c.is_scalar() for c in self.terms.values())

    def embedded(self, nvars: int | None = None, alg: int | None = None) -> "CliffPoly":
        """View inside more variables and/or a larger coefficient algebra."""
        nvars = self.nvars if nvars is None else nvars
        alg = self.alg if alg is None else alg
        if nvars < self.nvars:
            raise ValueError(f"cannot drop variables: {self.nvars} -> {nvars}")
        if nvars == self.nvars and alg == self.alg:
            return self
        pad = (0,) * (nvars - self.nvars)
        acc = {exp + pad: coeff.embedded(alg) for exp, coeff in self.terms.items()}
        return CliffPoly._make(nvars, alg, acc)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.alg == other.alg and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def terms_sorted(self):
        """Terms in graded lexicographic exponent order."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def to_json(self) -> dict:
        return {
            "m": self.nvars,
            "terms": [{"exp": list(exp), "coeff": coeff.to_json()} for exp, coeff in self.terms_sorted()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CliffPoly":
        nvars = int(data["m"])
        terms = [(tuple(entry["exp"]), Multivector.from_json(entry["coeff"])) for entry in data["terms"]]
        alg = terms[0][1].m if terms else nvars
        return cls(nvars, terms, alg=alg)

    def __repr__(self) -> str:
        if not self.terms:
            return "CliffPoly(0)"
        parts = []
        for exp, coeff in self.terms_sorted():
            mono = "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exp) if e)
            parts.append(f"{coeff!r}*{mono}" if mono else repr(coeff))
        return "CliffPoly(" + " + ".join(parts) + ")"


def poly_mul(p: CliffPoly, q: CliffPoly) -> CliffPoly:
    """Noncommutative polynomial product (p's coefficients on the left)."""
    return p * q


def partial_derivative(p: CliffPoly, i: int) -> CliffPoly:
    return p.partial(i)


def partial_pm(p: CliffPoly, sign: str) -> CliffPoly:
    """(d/dx_1 + s*i*d/dx_2)/2 with s read from '+' or '-'."""
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    unit = GaussianRational(0, 1 if sign == "+" else -1)
    return (p.partial(1) + p.partial(2) * unit) * Fraction(1, 2)


def partial_e12(p: CliffPoly) -> CliffPoly:
    """(d/dx_1 + e_12 * d/dx_2)/2 with e_12 acting by left multiplication."""
    e12 = Multivector.blade(p.alg, (1, 2))
    return (p.partial(1) + p.partial(2).mul_left_const(e12)) * Fraction(1, 2)


def dirac_left(p: CliffPoly, limit: int | None = None) -> CliffPoly:
    """sum_{i<=limit} e_i d/dx_i acting by left multiplication.

    `limit` defaults to all variables; `limit = nvars - 1` gives the
    boundary Dirac operator used by the Cauchy-Kovalevskaya extension.
    """
    limit = p.nvars if limit is None else limit
    if not 0 <= limit <= p.nvars:
        raise ValueError(f"limit {limit} out of range 0..{p.nvars}")
    total = CliffPoly.zero(p.nvars, p.alg)
    for i in range(1, limit + 1):
        total = total + p.partial(i).mul_left_const(Multivector.basis_vector(p.alg, i))
    return total


def laplacian(p: CliffPoly) -> CliffPoly:
    total = CliffPoly.zero(p.nvars, p.alg)
    for i in range(1, p.nvars + 1):
        total = total + p.partial(i).partial(i)
    return total


def is_monogenic(p: CliffPoly) -> bool:
    return not dirac_left(p)


def is_harmonic(p: CliffPoly) -> bool:
    return not laplacian(p)


def ck_extension(p: CliffPoly, m: int | None = None) -> CliffPoly:
    """Cauchy-Kovalevskaya extension exp(x_m e_m d_underline) applied to p.

    `p` is a polynomial in x_1..x_{m-1}; the result is its unique monogenic
    extension to m variables.  The boundary Dirac operator lowers degree, so
    the exponential series is a finite sum.
    """
    m = p.nvars + 1 if m is None else m
    if p.nvars not in (m - 1, m):
        raise ValueError(f"polynomial in {p.nvars} variables cannot extend to {m}")
    if p.nvars == m and any(exp[m - 1] for exp in p.terms):
        raise ValueError("input already depends on the extension variable")
    alg = max(p.alg, m)
    current = p.embedded(nvars=m, alg=alg)
    total = current
    e_m = Multivector.basis_vector(alg, m)
    x_m = CliffPoly.variable(m, m, alg)
    level = 0
    while current:
        level += 1
        current = x_m * dirac_left(current, m - 1).mul_left_const(e_m) * Fraction(1, level)
        total = total + current
    return total
