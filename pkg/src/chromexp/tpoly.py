"""Exact univariate polynomials in the ascent-counting variable t.

Coefficients are Python ints or fractions.Fraction, so every ring
operation is exact. Instances are immutable and hashable, which lets
them serve as coefficient values inside term maps.
"""

from __future__ import annotations

from fractions import Fraction


class TPoly:
    """A polynomial sum(c_k * t^k), stored densely with trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def of(cls, c) -> "TPoly":
        return cls((c,))

    @classmethod
    def t_power(cls, k: int) -> "TPoly":
        return cls((0,) * k + (1,))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == TPoly.of(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __add__(self, other) -> "TPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "TPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "TPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def evaluate(self, t=1):
        """Exact value at the given t (a horner evaluation)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self) -> str:
        return f"TPoly({self.coeffs!r})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                tk = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    parts.append(tk)
                elif c == -1:
                    parts.append(f"-{tk}")
                else:
                    parts.append(f"{c}{tk}")
        text = "+".join(parts).replace("+-", "-")
        return text


ZERO = TPoly()
ONE = TPoly((1,))


def _coerce(value):
    if isinstance(value, TPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return TPoly((value,))
    return None


def coeff_to_json(c):
    """One exact coefficient as a JSON value (int, or "num/den" for fractions)."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return f"{c.numerator}/{c.denominator}"
    return c


def coeff_from_json(value):
    if isinstance(value, str):
        num, _, den = value.partition("/")
        return Fraction(int(num), int(den or "1"))
    if isinstance(value, int):
        return value
    raise ValueError(f"not an exact coefficient: {value!r}")


def tpoly_to_json(p: TPoly) -> list:
    return [coeff_to_json(c) for c in p.coeffs]


def tpoly_from_json(data) -> TPoly:
    return TPoly(coeff_from_json(c) for c in data)
