"""Exact polynomials in two indeterminates ``i`` and ``j`` over the rationals.

A :class:`BiPoly` is a sparse map ``(a, b) -> c`` standing for ``sum c * i**a * j**b``.
Coefficients are kept as ``int`` whenever they are integral, and as
``fractions.Fraction`` otherwise, so integer matrices stay on the fast path.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm
from typing import Dict, Iterable, List, Optional, Tuple, Union

Number = Union[int, Fraction]
Exp = Tuple[int, int]


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Exp, Number]] = None):
        clean: Dict[Exp, Number] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = _norm(c)
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Exp, Number]) -> "BiPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c: Number) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def coerce(cls, x) -> "BiPoly":
        if isinstance(x, BiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to BiPoly")

    # -- basic predicates and accessors -----------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def constant_value(self) -> Number:
        return self.terms.get((0, 0), 0)

    def deg_i(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    def deg_j(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (a, b) in sorted(self.terms, key=lambda e: (-(e[0] + e[1]), -e[1], -e[0])):
            c = self.terms[(a, b)]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in (("i", a), ("j", b)) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "BiPoly":
        other = BiPoly.coerce(other)
        res = dict(self.terms)
        for e, c in other.terms.items():
            v = res.get(e, 0) + c
            if v:
                res[e] = _norm(v)
            else:
                res.pop(e, None)
        return BiPoly._raw(res)

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        return self + (-BiPoly.coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return BiPoly.coerce(other) - self

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly()
            return BiPoly._raw({e: _norm(c * other) for e, c in self.terms.items()})
        other = BiPoly.coerce(other)
        res: Dict[Exp, Number] = {}
        get = res.get
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                res[e] = get(e, 0) + c1 * c2
        return BiPoly({e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation and substitution --------------------------------------

    def __call__(self, i: Number, j: Number = 0) -> Number:
        return self.evaluate(i, j)

    def evaluate(self, i: Number, j: Number = 0) -> Number:
        total: Number = 0
        for (a, b), c in self.terms.items():
            total += c * i**a * j**b
        return _norm(total) if isinstance(total, Fraction) else total

    def shift(self, da: int, db: int) -> "BiPoly":
        """Substitute ``i -> i + da`` and ``j -> j + db``."""
        res: Dict[Exp, Number] = {}
        for (a, b), c in self.terms.items():
            for s in range(a + 1):
                ca = c * comb(a, s) * da ** (a - s)
                if not ca:
                    continue
                for t in range(b + 1):
                    v = ca * comb(b, t) * db ** (b - t)
                    if v:
                        res[(s, t)] = res.get((s, t), 0) + v
        return BiPoly(res)

    def on_diagonal(self, offset: int) -> "BiPoly":
        """Substitute ``j -> i + offset``, leaving a polynomial in ``i`` only."""
        res: Dict[Exp, Number] = {}
        for (a, b), c in self.terms.items():
            for t in range(b + 1):
                v = c * comb(b, t) * offset ** (b - t)
                if v:
                    e = (a + t, 0)
                    res[e] = res.get(e, 0) + v
        return BiPoly(res)

    def swap(self) -> "BiPoly":
        return BiPoly._raw({(b, a): c for (a, b), c in self.terms.items()})

    # -- content and division ---------------------------------------------

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` integral and primitive."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "BiPoly":
        """Integral primitive associate, normalised so the leading coefficient is positive."""
        if not self.terms:
            return self
        c = self.content()
        p = self * (1 / c)
        if p.terms[p.leading_exp()] < 0:
            p = -p
        return p

    def leading_exp(self) -> Exp:
        # j-major lex order; matches the recursive view as a polynomial in j
        return max(self.terms, key=lambda e: (e[1], e[0]))

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        """Quotient ``self / other``; raises ``ArithmeticError`` when inexact."""
        q = self.divide(other)
        if q is None:
            raise ArithmeticError("division is not exact")
        return q

    def divide(self, other: "BiPoly") -> Optional["BiPoly"]:
        """Exact quotient, or ``None`` when ``other`` does not divide ``self``."""
        other = BiPoly.coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return BiPoly()
        la, lb = other.leading_exp()
        lc = other.terms[(la, lb)]
        rest = [(e, c) for e, c in other.terms.items() if e != (la, lb)]
        rem = dict(self.terms)
        quot: Dict[Exp, Number] = {}
        while rem:
            a, b = max(rem, key=lambda e: (e[1], e[0]))
            if a < la or b < lb:
                return None
            c = rem.pop((a, b))
            qc = Fraction(c, lc) if isinstance(c, int) and isinstance(lc, int) else c / lc
            qc = _norm(qc)
            qa, qb = a - la, b - lb
            quot[(qa, qb)] = qc
            for (ea, eb), ec in rest:
                e = (ea + qa, eb + qb)
                v = rem.get(e, 0) - qc * ec
                if v:
                    rem[e] = v
                else:
                    rem.pop(e, None)
        return BiPoly(quot)

    def __floordiv__(self, other) -> "BiPoly":
        return self.exact_div(BiPoly.coerce(other))

    # -- recursive (univariate in j) view ---------------------------------

    def coeffs_in_j(self) -> Dict[int, "BiPoly"]:
        out: Dict[int, Dict[Exp, Number]] = {}
        for (a, b), c in self.terms.items():
            out.setdefault(b, {})[(a, 0)] = c
        return {b: BiPoly._raw(t) for b, t in out.items()}

    @classmethod
    def from_coeffs_in_j(cls, coeffs: Dict[int, "BiPoly"]) -> "BiPoly":
        terms: Dict[Exp, Number] = {}
        for b, p in coeffs.items():
            for (a, _), c in p.terms.items():
                terms[(a, b)] = c
        return cls(terms)

    def univariate_i(self) -> List[Number]:
        """Dense coefficient list (index = power of ``i``); requires no ``j``."""
        if any(b for _, b in self.terms):
            raise ValueError("polynomial involves j")
        out: List[Number] = [0] * (self.deg_i() + 1)
        for (a, _), c in self.terms.items():
            out[a] = c
        return out


I = BiPoly({(1, 0): 1})
J = BiPoly({(0, 1): 1})
ONE = BiPoly.const(1)
ZERO = BiPoly()


def linear_form(alpha: int, beta: int, gamma: int) -> BiPoly:
    return BiPoly({(1, 0): alpha, (0, 1): beta, (0, 0): gamma})


def from_int_matrix(rows: Iterable[Iterable[Number]]) -> List[List[BiPoly]]:
    return [[BiPoly.const(c) for c in row] for row in rows]
