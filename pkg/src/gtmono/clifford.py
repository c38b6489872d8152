"""The complexified Clifford algebra C_m and its spinor realization.

A multivector is a sparse map from index-set blades to Gaussian-rational
coefficients, with the relations e_j^2 = -1 and e_i e_j = -e_j e_i.
Conjugation is the anti-automorphism determined by e_j -> -e_j, composed
with complex conjugation of coefficients; on a blade of cardinality r the
blade sign is (-1)^(r(r+1)/2).  With this choice the scalar part of
conjugate(a)*a is the sum of squared coefficient moduli, which makes the
inner-product positivity checks exact.

The spinor space S_{2n} = C_{2n}*I is realized through the Witt basis
w_j = (e_{2j-1} + i*e_{2j})/2 and the primitive idempotent I = I_1...I_n
with I_j = conj_w_j * w_j.  Sign sequences of length n-1 label the
one-dimensional chain pieces; `spinor_generators` builds their generators
v^nu, and `spinor_components` inverts u = sum_nu g^nu v^nu exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Tuple

from . import linalg
from .scalars import GR_ONE, GR_ZERO, GaussianRational, format_rational, parse_rational

Blade = Tuple[int, ...]


class DimensionMismatch(ValueError):
    """Operands live in Clifford algebras of different dimensions."""


@lru_cache(maxsize=None)
def _blade_product(a: Blade, b: Blade) -> tuple[int, Blade]:
    """Product of basis blades: sign and the resulting sorted index set."""
    sign = 1
    out = list(a)
    for t in b:
        i = len(out)
        while i > 0 and out[i - 1] > t:
            i -= 1
        if (len(out) - i) % 2:
            sign = -sign
        if i > 0 and out[i - 1] == t:
            sign = -sign  # e_t e_t = -1
            out.pop(i - 1)
        else:
            out.insert(i, t)
    return sign, tuple(out)


def _conjugation_sign(r: int) -> int:
    # (-1)^(r(r+1)/2) cycles with period 4: +, -, -, +
    return -1 if r % 4 in (1, 2) else 1


class Multivector:
    """Element of C_m as a sparse blade-to-coefficient map.

    Instances are immutable by convention; `terms` must never be mutated.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[Blade, GaussianRational] | Iterable = ()):
        if m < 1:
            raise ValueError(f"algebra dimension must be >= 1, got {m}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Blade, GaussianRational] = {}
        for blade, coeff in items:
            blade = tuple(blade)
            if any(not (1 <= i <= m) for i in blade):
                raise ValueError(f"blade {blade} out of range for C_{m}")
            if list(blade) != sorted(set(blade)):
                raise ValueError(f"blade {blade} is not strictly increasing")
            if not isinstance(coeff, GaussianRational):
                coeff = GaussianRational(coeff)
            if coeff:
                prev = clean.get(blade)
                total = coeff if prev is None else prev + coeff
                if total:
                    clean[blade] = total
                elif blade in clean:
                    del clean[blade]
        self.m = m
        self.terms = clean

    @classmethod
    def _make(cls, m: int, terms: dict[Blade, GaussianRational]) -> "Multivector":
        out = object.__new__(cls)
        out.m = m
        out.terms = terms
        return out

    @classmethod
    def zero(cls, m: int) -> "Multivector":
        return cls._make(m, {})

    @classmethod
    def scalar(cls, m: int, value) -> "Multivector":
        value = value if isinstance(value, GaussianRational) else GaussianRational(value)
        return cls._make(m, {(): value} if value else {})

    @classmethod
    def blade(cls, m: int, indices: Iterable[int], coeff=1) -> "Multivector":
        return cls(m, [(tuple(indices), coeff)])

    @classmethod
    def basis_vector(cls, m: int, i: int) -> "Multivector":
        return cls(m, [((i,), GR_ONE)])

    def _check_dim(self, other: "Multivector"):
        if self.m != other.m:
            raise DimensionMismatch(f"C_{self.m} vs C_{other.m}")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_dim(other)
        acc = dict(self.terms)
        for blade, coeff in other.terms.items():
            cur = acc.get(blade)
            total = coeff if cur is None else cur + coeff
            if total:
                acc[blade] = total
            elif blade in acc:
                del acc[blade]
        return Multivector._make(self.m, acc)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Multivector._make(self.m, {b: -c for b, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._check_dim(other)
            acc: dict[Blade, GaussianRational] = {}
            for s, a in self.terms.items():
                for t, b in other.terms.items():
                    sign, blade = _blade_product(s, t)
                    c = a * b
                    if sign < 0:
                        c = -c
                    cur = acc.get(blade)
                    total = c if cur is None else cur + c
                    if total:
                        acc[blade] = total
                    elif blade in acc:
                        del acc[blade]
            return Multivector._make(self.m, acc)
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return NotImplemented
        if not scalar:
            return Multivector.zero(self.m)
        return Multivector._make(self.m, {b: c * scalar for b, c in self.terms.items()})

    def __rmul__(self, other):
        # Only reached for scalar-likes; scalars are central.
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return NotImplemented
        return self * scalar

    def conjugate(self) -> "Multivector":
        acc = {}
        for blade, coeff in self.terms.items():
            c = coeff.conjugate()
            if _conjugation_sign(len(blade)) < 0:
                c = -c
            acc[blade] = c
        return Multivector._make(self.m, acc)

    def scalar_part(self) -> GaussianRational:
        return self.terms.get((), GR_ZERO)

    def coefficient(self, blade: Iterable[int]) -> GaussianRational:
        return self.terms.get(tuple(blade), GR_ZERO)

    def is_scalar(self) -> bool:
        return all(blade == () for blade in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def embedded(self, m: int) -> "Multivector":
        """The same element viewed inside the larger algebra C_m."""
        if m == self.m:
            return self
        if m < self.m:
            top = max((idx[-1] for idx in self.terms if idx), default=0)
            if top > m:
                raise DimensionMismatch(f"cannot restrict: blade uses e_{top} > {m}")
        return Multivector._make(m, dict(self.terms))

    def blades_sorted(self):
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "blades": [
                {"idx": list(blade), "re": format_rational(c.re), "im": format_rational(c.im)}
                for blade, c in self.blades_sorted()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Multivector":
        terms = [
            (tuple(entry["idx"]), GaussianRational(parse_rational(entry["re"]), parse_rational(entry["im"])))
            for entry in data["blades"]
        ]
        return cls(int(data["m"]), terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "<0>"
        parts = []
        for blade, coeff in self.blades_sorted():
            name = "e" + "".join(str(i) for i in blade) if blade else "1"
            parts.append(f"({coeff})*{name}")
        return "<" + " + ".join(parts) + ">"


@dataclass(frozen=True)
class SpinorFrame:
    """Witt basis data for C_{2n}: isotropic vectors, idempotents, chirality."""

    n: int
    w: tuple[Multivector, ...]
    wbar: tuple[Multivector, ...]
    idempotents: tuple[Multivector, ...]
    idempotent: Multivector
    chirality_op: Multivector


@lru_cache(maxsize=None)
def spinor_frame(n: int) -> SpinorFrame:
    """Build w_j, conj w_j, I_j, I = I_1...I_n and theta_{2n} inside C_{2n}."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    m = 2 * n
    half = Fraction(1, 2)
    ihalf = GaussianRational(0, half)
    w, wbar, idem = [], [], []
    for j in range(1, n + 1):
        odd, even = 2 * j - 1, 2 * j
        w.append(Multivector(m, {(odd,): GaussianRational(half), (even,): ihalf}))
        wbar.append(Multivector(m, {(odd,): GaussianRational(-half), (even,): ihalf}))
        idem.append(wbar[-1] * w[-1])
    total = idem[0]
    for part in idem[1:]:
        total = total * part
    minus_i_pow = [GaussianRational(1), GaussianRational(0, -1), GaussianRational(-1), GaussianRational(0, 1)]
    theta = Multivector(m, {tuple(range(1, m + 1)): minus_i_pow[n % 4]})
    return SpinorFrame(n, tuple(w), tuple(wbar), tuple(idem), total, theta)


def _check_spin_sequence(nu: str, n: int):
    if len(nu) != n - 1 or any(ch not in "+-" for ch in nu):
        raise ValueError(f"spinor label {nu!r} must be a +/- sequence of length {n - 1}")


def spin_labels(m: int) -> list[str]:
    """All sign sequences labeling the one-dimensional spinor pieces."""
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    n = (m + 1) // 2
    labels = [""]
    for _ in range(n - 1):
        labels = [nu + s for nu in labels for s in "+-"]
    return sorted(labels)


@lru_cache(maxsize=None)
def _spinor_generators(m: int, chirality: str) -> tuple[tuple[str, Multivector], ...]:
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    if chirality not in "+-" or not chirality:
        raise ValueError(f"chirality must be '+' or '-', got {chirality!r}")
    if m % 2 and chirality != "+":
        raise ValueError(f"odd m = {m}: the realization fixes chirality '+'")
    n = (m + 1) // 2
    frame = spinor_frame(n)
    # States: sign sequence -> (sign of the current piece, its idempotent part).
    # Each branching step consumes the Witt vector w_{n-j+1}; a sign flip
    # multiplies the idempotent part by it, matching the parity bookkeeping of
    # the exterior-algebra splitting.
    states = {"": (chirality, frame.idempotent)}
    for step in range(1, n):
        witt = frame.w[n - step]  # w_{n-step+1}, the Witt vector consumed at this step
        nxt = {}
        for prefix, (last, part) in states.items():
            for sign in "+-":
                nxt[prefix + sign] = (sign, part if sign == last else witt * part)
        states = nxt
    out = []
    for nu in sorted(states):
        last, part = states[nu]
        out.append((nu, part if last == "+" else frame.w[0] * part))
    return tuple(out)


def spinor_generators(m: int, chirality: str = "+") -> dict[str, Multivector]:
    """Generators v^nu of the one-dimensional spinor pieces, keyed by label."""
    return dict(_spinor_generators(m, chirality))


def spinor_components(u: Multivector, generators: Mapping[str, Multivector]) -> dict[str, GaussianRational]:
    """Unique complex coefficients with u = sum_nu g^nu v^nu."""
    labels = sorted(generators)
    columns = [generators[nu].terms for nu in labels]
    solution = linalg.solve_columns(columns, u.terms)
    if solution is None:
        raise ValueError("multivector lies outside the realized spinor space")
    return dict(zip(labels, solution))
