"""Sparse multivariate polynomials with exact cyclotomic coefficients.

A polynomial carries a fixed variable count ``nvars``.  Throughout this
library the first ``nvars - 1`` slots are the per-group-element variables
``x_0 .. x_{n-1}`` and the final slot is a single distinguished commuting
variable (printed ``X``) reserved for characteristic polynomials.  Terms map
exponent tuples to nonzero :class:`~groupdet.cyclotomic.Cyclotomic`
coefficients; graded-lexicographic ordering fixes the printed form, so equal
polynomials always print identically.
"""

from __future__ import annotations

import math
from fractions import Fraction
from operator import add as _add

from .cyclotomic import Cyclotomic, cyclotomic_from_json
from .errors import ZeroPolynomial

Scalar = (int, Fraction, Cyclotomic)


def _as_cyclotomic(value) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.rational(value, 1)


class MultiPoly:
    """A sparse polynomial over Q(zeta); immutable by convention."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict):
        # Trusted internal constructor; use the classmethods to build safely.
        self.nvars = nvars
        self.terms = terms

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def _make(cls, nvars: int, terms: dict) -> "MultiPoly":
        return cls(nvars, {e: c for e, c in terms.items() if not c.is_zero})

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "MultiPoly":
        c = _as_cyclotomic(value)
        if c.is_zero:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise IndexError(f"variable {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Cyclotomic.one()})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff=1) -> "MultiPoly":
        c = _as_cyclotomic(coeff)
        exps = tuple(exps)
        if len(exps) != nvars:
            raise ValueError("exponent vector length does not match nvars")
        if c.is_zero:
            return cls.zero(nvars)
        return cls(nvars, {exps: c})

    # ------------------------------------------------------------------
    # ring structure

    def _check_compatible(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError(
                f"polynomials over different variable sets: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other):
        if isinstance(other, Scalar):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            if cur is None:
                terms[e] = c
            else:
                s = cur + c
                if s.is_zero:
                    del terms[e]
                else:
                    terms[e] = s
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Scalar):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(map(_add, e1, e2))
                prod = c1 * c2
                cur = acc.get(key)
                if cur is None:
                    acc[key] = prod
                else:
                    acc[key] = cur + prod
        return MultiPoly._make(self.nvars, acc)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, value) -> "MultiPoly":
        c = _as_cyclotomic(value)
        if c.is_zero:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._make(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = MultiPoly.one(self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Cyclotomic:
        if self.is_zero:
            return Cyclotomic.zero()
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no total degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: int) -> bool:
        """True when every term has the given total degree (vacuous on zero)."""
        return all(sum(e) == degree for e in self.terms)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=0)

    def variables_used(self) -> tuple[int, ...]:
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return tuple(sorted(used))

    def coefficient_of(self, var: int, power: int) -> "MultiPoly":
        """The coefficient of var**power, with that variable removed."""
        out = {}
        for e, c in self.terms.items():
            if e[var] == power:
                key = e[:var] + (0,) + e[var + 1:]
                out[key] = c
        return MultiPoly(self.nvars, out)

    def split_by_variable(self, var: int) -> dict[int, "MultiPoly"]:
        """Group terms by the exponent of one variable, removing it."""
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            key = e[:var] + (0,) + e[var + 1:]
            buckets.setdefault(e[var], {})[key] = c
        return {k: MultiPoly(self.nvars, t) for k, t in buckets.items()}

    def eval(self, assignment: dict) -> Cyclotomic:
        """Evaluate with a total assignment of the variables that occur.

        ``assignment`` maps variable index to an int, Fraction or Cyclotomic.
        """
        values = {i: _as_cyclotomic(v) for i, v in assignment.items()}
        total = Cyclotomic.zero()
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    if i not in values:
                        raise ValueError(f"no value assigned for variable {i}")
                    term = term * values[i] ** k
            total = total + term
        return total

    # ------------------------------------------------------------------
    # comparison and rendering

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        return self.terms == other.terms

    __hash__ = None

    def _ordered_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def default_names(self) -> list[str]:
        return [f"x_{i}" for i in range(self.nvars - 1)] + ["X"]

    def render(self, var_names=None) -> str:
        if not self.terms:
            return "0"
        names = var_names or self.default_names()
        chunks = []
        for exps, coeff in self._ordered_terms():
            factors = []
            for i, k in enumerate(exps):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{k}")
            body = "*".join(factors)
            if coeff.is_rational:
                c = coeff.as_rational()
                neg = c < 0
                c = abs(c)
                head = "" if (c == 1 and body) else str(c)
            else:
                neg = False
                head = f"({coeff.render()})"
            if head and body:
                text = f"{head}*{body}"
            else:
                text = head or body
            chunks.append(("-" if neg else "+", text))
        sign, text = chunks[0]
        out = f"-{text}" if sign == "-" else text
        for sign, text in chunks[1:]:
            out += f" {sign} {text}"
        return out

    def latex(self, var_names=None) -> str:
        if not self.terms:
            return "0"
        names = var_names or (
            [f"x_{{{i}}}" for i in range(self.nvars - 1)] + ["X"]
        )
        chunks = []
        for exps, coeff in self._ordered_terms():
            factors = []
            for i, k in enumerate(exps):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{{{k}}}")
            body = " ".join(factors)
            if coeff.is_rational:
                c = coeff.as_rational()
                neg = c < 0
                c = abs(c)
                if c == 1 and body:
                    head = ""
                elif c.denominator == 1:
                    head = str(c.numerator)
                else:
                    head = f"\\tfrac{{{c.numerator}}}{{{c.denominator}}}"
            else:
                neg = False
                head = f"\\left({coeff.latex()}\\right)"
            text = f"{head} {body}".strip()
            chunks.append(("-" if neg else "+", text))
        sign, text = chunks[0]
        out = f"-{text}" if sign == "-" else text
        for sign, text in chunks[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r})"

    def json_obj(self) -> dict:
        conductor = 1
        for coeff in self.terms.values():
            conductor = math.lcm(conductor, coeff.conductor)
        terms = {}
        for exps, coeff in self._ordered_terms():
            key = ",".join(map(str, exps))
            lifted = coeff.lift(conductor)
            terms[key] = [[c.numerator, c.denominator]
                          for c in map(Fraction, lifted.coeffs)]
        return {"nvars": self.nvars, "conductor": conductor, "terms": terms}


def poly_from_json(obj: dict) -> MultiPoly:
    nvars = obj["nvars"]
    out: dict = {}
    for key, coeffs in obj["terms"].items():
        exps = tuple(int(p) for p in key.split(",")) if key else ()
        if len(exps) != nvars:
            raise ValueError("exponent vector length does not match nvars")
        conductor = obj["conductor"]
        cyc = cyclotomic_from_json({"conductor": conductor, "coeffs": coeffs})
        out[exps] = cyc
    return MultiPoly._make(nvars, out)
