"""Exact sparse Laurent polynomials with integer coefficients.

Two flavours are provided: :class:`LaurentPoly1` in a single variable (``A`` or
``t``) and :class:`LaurentPoly2` in the pair ``(A, u)``.  Both store only the
nonzero coefficients in a dictionary keyed by exponent.  Everything is exact;
coefficients are Python integers and expansion coefficients are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

Rational = Fraction

__all__ = ["LaurentPoly1", "LaurentPoly2", "Rational", "exp_coeff", "exp_coeff2"]


def _clean(terms):
    return {k: v for k, v in terms.items() if v}


class LaurentPoly1:
    """Laurent polynomial in one variable, e.g. ``-A^10 + A^6 + A^4``."""

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "A"):
        self._terms = _clean(dict(terms or {}))
        self.var = var

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "A") -> LaurentPoly1:
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "A") -> LaurentPoly1:
        return cls({0: c}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def max_abs_degree(self) -> int:
        return max((abs(e) for e in self._terms), default=0)

    def _coerce(self, other) -> LaurentPoly1:
        if isinstance(other, LaurentPoly1):
            return other
        if isinstance(other, int):
            return LaurentPoly1.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly1({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly1(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly1({-e * -n: c ** -n}, self.var)
        result = LaurentPoly1.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly1:
        """Multiply by ``var**k``."""
        return LaurentPoly1({e + k: c for e, c in self._terms.items()}, self.var)

    def invert_variable(self) -> LaurentPoly1:
        """Substitute ``x -> 1/x``."""
        return LaurentPoly1({-e: c for e, c in self._terms.items()}, self.var)

    def at_one(self) -> int:
        return sum(self._terms.values())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1.constant(other, self.var)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly1({self}, var={self.var!r})"

    def __str__(self):
        return render_terms(self._terms, self.var)


def _mono(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def render_terms(terms: Mapping[int, int], var: str) -> str:
    """Render as a signed sum: descending exponent, constant term last."""
    if not terms:
        return "0"
    order = sorted((e for e in terms if e != 0), reverse=True)
    if 0 in terms:
        order.append(0)
    parts = []
    for i, e in enumerate(order):
        c = terms[e]
        mono = _mono(var, e)
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


class LaurentPoly2:
    """Laurent polynomial in ``A`` and ``u``; keys are ``(exp_A, exp_u)``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = _clean(dict(terms or {}))

    @classmethod
    def from_poly1(cls, p: LaurentPoly1, u_exp: int = 0) -> LaurentPoly2:
        return cls({(e, u_exp): c for e, c in p.terms.items()})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def is_zero(self) -> bool:
        return not self._terms

    def u_exponents(self) -> list[int]:
        return sorted({u for _, u in self._terms})

    def u_part(self, u_exp: int) -> LaurentPoly1:
        """The coefficient of ``u**u_exp`` as a polynomial in ``A``."""
        return LaurentPoly1({a: c for (a, u), c in self._terms.items() if u == u_exp}, "A")

    def specialize_u(self, value: int = 1) -> LaurentPoly1:
        if value not in (1, -1):
            raise ValueError("u can only be specialised to +1 or -1")
        out: dict[int, int] = {}
        for (a, u), c in self._terms.items():
            out[a] = out.get(a, 0) + c * (value ** (u % 2))
        return LaurentPoly1(out, "A")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly1):
            other = LaurentPoly2.from_poly1(other)
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a1, u1), c1 in self._terms.items():
            for (a2, u2), c2 in other._terms.items():
                k = (a1 + a2, u1 + u2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def shift(self, a: int = 0, u: int = 0) -> LaurentPoly2:
        return LaurentPoly2({(ea + a, eu + u): c for (ea, eu), c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly2({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for ue in self.u_exponents():
            part = self.u_part(ue)
            text = str(part)
            multi = len(part.terms) > 1
            if ue == 0:
                chunks.append(text)
                continue
            umono = _mono("u", ue)
            if multi:
                chunks.append(f"({text})*{umono}")
            elif part.terms == {0: 1}:
                chunks.append(umono)
            elif part.terms == {0: -1}:
                chunks.append(f"-{umono}")
            else:
                chunks.append(f"{text}*{umono}")
        out = chunks[0]
        for c in chunks[1:]:
            out += f" - {c[1:]}" if c.startswith("-") else f" + {c}"
        return out


def exp_coeff(p: LaurentPoly1, n: int) -> Fraction:
    """Coefficient of ``x**n`` in ``p(e**x)``, i.e. ``sum(c_l * l**n) / n!``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Fraction(sum(c * e**n for e, c in p.terms.items()), factorial(n))


def exp_coeff2(p: LaurentPoly2, k: int) -> dict[int, Fraction]:
    """For each power ``u**l``, the coefficient ``t_{k,l}`` of ``x**k`` after ``A = e**x``.

    Zero coefficients are dropped.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    out: dict[int, Fraction] = {}
    for ue in p.u_exponents():
        v = exp_coeff(p.u_part(ue), k)
        if v:
            out[ue] = v
    return out


def poly_from_pairs(pairs: Iterable[tuple[int, int]], var: str = "A") -> LaurentPoly1:
    out: dict[int, int] = {}
    for e, c in pairs:
        out[e] = out.get(e, 0) + c
    return LaurentPoly1(out, var)
