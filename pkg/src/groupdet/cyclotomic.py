"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of conductor N is a residue modulo the N-th cyclotomic polynomial
Phi_N, stored as a coefficient vector of length deg(Phi_N) over
arbitrary-precision rationals.  Mixed conductors are coerced to the lcm
conductor through zeta_N = zeta_M ** (M // N), an injective field embedding,
so arithmetic and equality across conductors stay exact.  There is no
floating point anywhere in this module.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

#: Ground-field scalars: reduced arbitrary-precision rationals.
BigRational = Fraction

Rational = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending, as ints.

    Computed by dividing x**n - 1 by the product of all Phi_d with d | n,
    d < n; every division along the way is exact.
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide by a monic integer polynomial; the remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dd]
        quot[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


@lru_cache(maxsize=None)
def _zeta_power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k is x**k reduced modulo Phi_n, for k = 0..n-1.

    Exponents of zeta_n are periodic mod n, so these rows reduce any power.
    """
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        cur = [0] + cur
        lead = cur.pop()
        if lead:
            for j in range(deg):
                cur[j] -= lead * phi[j]
    return tuple(rows)


def _degree(conductor: int) -> int:
    return len(cyclotomic_polynomial(conductor)) - 1


class Cyclotomic:
    """An element of Q(zeta_N) in reduced residue form.

    Instances are immutable.  Arithmetic accepts ints and Fractions on either
    side and coerces mixed conductors automatically.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: tuple):
        # Trusted internal constructor: len(coeffs) must equal deg Phi_N.
        self.conductor = conductor
        self.coeffs = coeffs

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def rational(cls, value: Rational, conductor: int = 1) -> "Cyclotomic":
        v = Fraction(value)
        deg = _degree(conductor)
        return cls(conductor, (v,) + (_ZERO,) * (deg - 1))

    @classmethod
    def zero(cls, conductor: int = 1) -> "Cyclotomic":
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "Cyclotomic":
        return cls.rational(1, conductor)

    # ------------------------------------------------------------------
    # structure queries

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def __bool__(self) -> bool:
        return not self.is_zero

    # ------------------------------------------------------------------
    # coercion

    def lift(self, conductor: int) -> "Cyclotomic":
        """Re-express this element in Q(zeta_M) for a multiple M of N."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(
                f"cannot lift conductor {self.conductor} to {conductor}"
            )
        rows = _zeta_power_rows(conductor)
        step = conductor // self.conductor
        acc = [_ZERO] * _degree(conductor)
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[(i * step) % conductor]
                for j, r in enumerate(row):
                    if r:
                        acc[j] += c * r
        return Cyclotomic(conductor, tuple(acc))

    @staticmethod
    def _pair(a: "Cyclotomic", b: "Cyclotomic"):
        if a.conductor == b.conductor:
            return a, b
        m = math.lcm(a.conductor, b.conductor)
        return a.lift(m), b.lift(m)

    def _coerce_other(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(other, 1)
        return None

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        a, b = Cyclotomic._pair(self, other)
        return Cyclotomic(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        a, b = Cyclotomic._pair(self, other)
        return Cyclotomic(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        a, b = Cyclotomic._pair(self, other)
        ca, cb = a.coeffs, b.coeffs
        deg = len(ca)
        if deg == 1:
            return Cyclotomic(a.conductor, (ca[0] * cb[0],))
        conv = [_ZERO] * (2 * deg - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        conv[i + j] += x * y
        res = conv[:deg]
        rows = _zeta_power_rows(a.conductor)
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c:
                row = rows[k % a.conductor]
                for j, r in enumerate(row):
                    if r:
                        res[j] += c * r
        return Cyclotomic(a.conductor, tuple(res))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero:
            raise ZeroDivisionError("cyclotomic division by zero")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        inv = _poly_modular_inverse([Fraction(c) for c in self.coeffs], phi)
        deg = _degree(self.conductor)
        inv = inv + [_ZERO] * (deg - len(inv))
        return Cyclotomic(self.conductor, tuple(inv[:deg]))

    def __truediv__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # comparison and rendering

    def __eq__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        a, b = Cyclotomic._pair(self, other)
        return all(x == y for x, y in zip(a.coeffs, b.coeffs))

    __hash__ = None  # cross-conductor equality makes hashing unreliable

    def render(self) -> str:
        if self.is_rational:
            return str(Fraction(self.coeffs[0]))
        sym = f"zeta{self.conductor}"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            c = Fraction(c)
            if i == 0:
                parts.append(str(c))
                continue
            power = sym if i == 1 else f"{sym}^{i}"
            if c == 1:
                term = power
            elif c == -1:
                term = f"-{power}"
            else:
                term = f"{c}*{power}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def latex(self) -> str:
        if self.is_rational:
            return _latex_fraction(Fraction(self.coeffs[0]))
        sym = f"\\zeta_{{{self.conductor}}}"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            c = Fraction(c)
            if i == 0:
                parts.append(_latex_fraction(c))
                continue
            power = sym if i == 1 else f"{sym}^{{{i}}}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{_latex_fraction(c)} {power}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {self.render()!r})"

    def json_obj(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[c.numerator, c.denominator] for c in map(Fraction, self.coeffs)],
        }


def cyclotomic_from_json(obj: dict) -> Cyclotomic:
    coeffs = tuple(Fraction(num, den) for num, den in obj["coeffs"])
    n = obj["conductor"]
    if len(coeffs) != _degree(n):
        raise ValueError("coefficient vector length does not match conductor")
    return Cyclotomic(n, coeffs)


def root_of_unity(n: int, k: int) -> Cyclotomic:
    """zeta_n ** k as an exact element of Q(zeta_n)."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    return Cyclotomic(n, _zeta_power_rows(n)[k % n])


def _latex_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def _poly_modular_inverse(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo an irreducible monic polynomial over Q."""

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    def shifted_sub(p, q, c, shift):
        # p -= c * x**shift * q, in place
        while len(p) < len(q) + shift:
            p.append(_ZERO)
        for i, qc in enumerate(q):
            if qc:
                p[i + shift] -= c * qc
        return trim(p)

    r0, r1 = trim(list(mod)), trim(list(a))
    s0, s1 = [], [_ONE]  # s tracks the coefficient of `a`
    while r1:
        while len(r0) >= len(r1):
            c = r0[-1] / r1[-1]
            shift = len(r0) - len(r1)
            r0 = shifted_sub(r0, r1, c, shift)
            s0 = shifted_sub(s0, s1, c, shift)
            if not r0:
                break
        r0, r1 = r1, r0
        s0, s1 = s1, s0
    # r0 is now a nonzero constant gcd (mod is irreducible).
    if len(r0) != 1:
        raise ArithmeticError("modulus is not coprime to the element")
    scale = r0[0]
    return [c / scale for c in s0]
