"""Sparse exact polynomials on S(W+) and the Poisson structure coming from the Witt bracket.

Monomials are partitions: ascending tuples of positive integers, ``(2, 2, 5)``
standing for ``x2^2 * x5``; the empty tuple is the monomial 1. Two gradings
are carried: ``d`` (sum of the parts) and ``o`` (number of parts).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

Partition = Tuple[int, ...]
Coef = Fraction
Scalar = Union[int, Fraction]


def partition(parts: Iterable[int]) -> Partition:
    p = tuple(sorted(int(x) for x in parts))
    if p and p[0] < 1:
        raise ValueError(f"partition parts must be positive, got {p}")
    return p


def p_degree(lam: Partition) -> int:
    return sum(lam)


def p_order(lam: Partition) -> int:
    return len(lam)


@lru_cache(maxsize=1 << 16)
def monomial_key(lam: Partition) -> Tuple[int, Partition]:
    """Sort key of the graded reverse lexicographic order on partitions.

    Size first, then the reversed part sequence lexicographically. On two-part
    partitions this is the order on pairs ``(i, j)``: sum first, then ``j``.
    """
    return (sum(lam), lam[::-1])


def merge(a: Partition, b: Partition) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


@lru_cache(maxsize=1 << 16)
def _partials(lam: Partition) -> Tuple[Tuple[int, int, Partition], ...]:
    """For each distinct part ``a``: ``(a, multiplicity, lam with one a removed)``."""
    out = []
    n = len(lam)
    k = 0
    while k < n:
        a = lam[k]
        m = 1
        while k + m < n and lam[k + m] == a:
            m += 1
        out.append((a, m, lam[:k] + lam[k + 1:]))
        k += m
    return tuple(out)


def _insert(lam: Partition, a: int) -> Partition:
    for k, v in enumerate(lam):
        if v >= a:
            return lam[:k] + (a,) + lam[k:]
    return lam + (a,)


class Poly:
    """An element of S(W+): a finite map from partitions to nonzero rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Scalar] | None = None):
        clean: Dict[Partition, Coef] = {}
        if terms:
            for lam, c in terms.items():
                if c:
                    key = partition(lam)
                    clean[key] = clean.get(key, 0) + Fraction(c)
            clean = {k: v for k, v in clean.items() if v}
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Partition, Coef]) -> "Poly":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls._raw({(): Fraction(c)} if c else {})

    @classmethod
    def x(cls, n: int) -> "Poly":
        if n < 1:
            raise ValueError(f"generator index must be >= 1, got {n}")
        return cls._raw({(n,): Fraction(1)})

    @classmethod
    def monomial(cls, lam: Iterable[int], c: Scalar = 1) -> "Poly":
        return cls._raw({partition(lam): Fraction(c)} if c else {})

    # -- inspection -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Partition, Coef]]:
        return iter(self.terms.items())

    def coefficient(self, lam: Iterable[int]) -> Coef:
        return self.terms.get(partition(lam), Fraction(0))

    def d(self) -> int:
        """Degree grading: the largest part-sum among the terms."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(lam) for lam in self.terms)

    def o(self) -> int:
        """Order grading: the largest number of parts among the terms."""
        if not self.terms:
            raise ValueError("the zero polynomial has no order")
        return max(len(lam) for lam in self.terms)

    def max_index(self) -> int:
        return max((lam[-1] for lam in self.terms if lam), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(lam) for lam in self.terms}) <= 1

    def is_bihomogeneous(self) -> bool:
        return len({(sum(lam), len(lam)) for lam in self.terms}) <= 1

    def leading_monomial(self) -> Partition:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=monomial_key)

    def leading_coefficient(self) -> Coef:
        return self.terms[self.leading_monomial()]

    def sorted_terms(self) -> List[Tuple[Partition, Coef]]:
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        from .exprio import render

        return render(self)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        res = dict(self.terms)
        for k, v in other.terms.items():
            s = res.get(k, 0) + v
            if s:
                res[k] = s
            else:
                res.pop(k, None)
        return Poly._raw(res)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero()
        return Poly._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        res: Dict[Partition, Coef] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = merge(a, b)
                res[m] = res.get(m, 0) + ca * cb
        return Poly._raw({k: v for k, v in res.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def truncate(self, keep) -> "Poly":
        """Drop every term whose partition fails ``keep``."""
        return Poly._raw({k: v for k, v in self.terms.items() if keep(k)})


def x(n: int) -> Poly:
    return Poly.x(n)


# -- Poisson structure ---------------------------------------------------------

def _bracket_monomials(u: Partition, v: Partition, c: Coef, out: Dict[Partition, Coef]) -> None:
    for a, ma, ur in _partials(u):
        for b, mb, vr in _partials(v):
            if a == b:
                continue
            w = c * (ma * mb * (b - a))
            m = _insert(merge(ur, vr), a + b)
            out[m] = out.get(m, 0) + w


def poisson_bracket(f: Poly, g: Poly) -> Poly:
    """``{f, g}``: the biderivation extending ``{x_i, x_j} = (j - i) x_{i+j}``."""
    out: Dict[Partition, Coef] = {}
    for u, cu in f.terms.items():
        for v, cv in g.terms.items():
            _bracket_monomials(u, v, cu * cv, out)
    return Poly._raw({k: c for k, c in out.items() if c})


def witt_act(k: int, f: Poly) -> Poly:
    """Action of ``e_k`` as a derivation: ``e_k . x_j = (j - k) x_{j+k}``."""
    if k < 1:
        raise ValueError(f"e_k needs k >= 1, got {k}")
    out: Dict[Partition, Coef] = {}
    for lam, c in f.terms.items():
        for a, m, rest in _partials(lam):
            if a == k:
                continue
            w = c * (m * (a - k))
            mono = _insert(rest, a + k)
            out[mono] = out.get(mono, 0) + w
    return Poly._raw({p: c for p, c in out.items() if c})


def u_act(word: Sequence[int], f: Poly) -> Poly:
    """Action of ``e_{w1} e_{w2} ... e_{wk}`` on f, rightmost factor applied first."""
    if not word:
        raise ValueError("operator word must be nonempty")
    for k in reversed(tuple(word)):
        f = witt_act(k, f)
        if not f:
            break
    return f


def leading_split(f: Poly) -> Tuple[Poly, Poly, int]:
    """Split ``{x1, f} = x_{n+1} p + q`` where n is the largest index occurring in f.

    Both p and q involve only ``x1 .. xn``.
    """
    if not f or f.max_index() == 0:
        raise ValueError("leading_split needs a nonconstant polynomial")
    n = f.max_index()
    b = poisson_bracket(Poly.x(1), f)
    p: Dict[Partition, Coef] = {}
    q: Dict[Partition, Coef] = {}
    for lam, c in b.terms.items():
        if lam and lam[-1] == n + 1:
            # x_{n+1} occurs at most linearly
            p[lam[:-1]] = c
        else:
            q[lam] = c
    return Poly._raw(p), Poly._raw(q), n


# -- Lie ideals of W+ inside the order-1 part ------------------------------------

class LieClosure:
    """Result of :func:`lie_ideal_closure`."""

    def __init__(self, space, cap: int, truncated: bool):
        self.space = space
        self.cap = cap
        self.truncated = truncated

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def complement_dim(self) -> int:
        """Dimension of ``span(x1..x_cap)`` modulo the computed closure."""
        return self.cap - self.space.dim

    def contains_generator(self, m: int) -> bool:
        return self.space.contains(Poly.x(m))

    def generators_contained(self) -> List[int]:
        return [m for m in range(1, self.cap + 1) if self.contains_generator(m)]


def lie_ideal_closure(g: Poly, index_cap: int) -> LieClosure:
    """Smallest subspace of ``span(x1..x_cap)`` holding g and stable under every ``e_k``.

    An ``e_k . v`` involving an index above the cap is dropped (and reported via
    ``truncated``), so the result always lies inside the true Lie ideal.
    """
    from .subspace import Subspace

    if not g or any(len(lam) != 1 for lam in g.terms):
        raise ValueError("lie_ideal_closure needs a nonzero linear combination of generators")
    if g.max_index() > index_cap:
        raise ValueError("generator exceeds the index cap")
    space = Subspace()
    truncated = False
    pending = [g]
    while pending:
        v = pending.pop()
        if not space.absorb(v):
            continue
        for k in range(1, index_cap + 1):
            w = witt_act(k, v)
            if not w:
                continue
            if w.max_index() > index_cap:
                truncated = True
                continue
            pending.append(w)
    return LieClosure(space.frozen(), index_cap, truncated)
