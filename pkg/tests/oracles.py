"""Independent reference computations used only by the tests.

Nothing here shares code with the package's kernels: brackets go through
sympy differentiation, ranks through sympy matrices, partitions through
sympy's generator and plain recursion.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import sympy

from wittpoisson.poly import Poly

MAX_VAR = 80
X = sympy.symbols(f"x1:{MAX_VAR + 1}")


def to_sympy(f: Poly):
    expr = sympy.Integer(0)
    for lam, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for a in lam:
            term *= X[a - 1]
        expr += term
    return sympy.expand(expr)


def from_sympy(expr) -> Poly:
    expr = sympy.expand(expr)
    if expr == 0:
        return Poly.zero()
    poly = sympy.Poly(expr, *X)
    terms = {}
    for exps, c in poly.terms():
        lam = tuple(k + 1 for k, e in enumerate(exps) for _ in range(e))
        terms[lam] = Fraction(int(c.p), int(c.q))
    return Poly(terms)


def _used(expr):
    return sorted({X.index(s) + 1 for s in expr.free_symbols})


def bracket(f: Poly, g: Poly) -> Poly:
    """sum_{i,j} (j - i) x_{i+j} df/dx_i dg/dx_j, by symbolic differentiation."""
    F, G = to_sympy(f), to_sympy(g)
    out = sympy.Integer(0)
    for i in _used(F):
        dF = sympy.diff(F, X[i - 1])
        for j in _used(G):
            if i != j:
                out += (j - i) * X[i + j - 1] * dF * sympy.diff(G, X[j - 1])
    return from_sympy(out)


def derivation(k: int, f: Poly) -> Poly:
    """e_k . f = sum_j (j - k) x_{j+k} df/dx_j."""
    F = to_sympy(f)
    out = sum(((j - k) * X[j + k - 1] * sympy.diff(F, X[j - 1]) for j in _used(F)),
              sympy.Integer(0))
    return from_sympy(out)


def word_action(word, f: Poly) -> Poly:
    for k in reversed(word):
        f = derivation(k, f)
    return f


def rank(polys) -> int:
    monos = sorted({lam for f in polys for lam in f.terms})
    if not monos:
        return 0
    M = sympy.Matrix([[sympy.Rational(f.coefficient(m).numerator, f.coefficient(m).denominator)
                       for m in monos] for f in polys])
    return M.rank()


def in_span(polys, f: Poly) -> bool:
    return rank(list(polys) + [f]) == rank(polys)


@lru_cache(maxsize=None)
def partitions(n: int):
    """All partitions of n as ascending tuples, via sympy."""
    from sympy.utilities.iterables import partitions as sp_parts

    out = []
    for p in sp_parts(n):
        out.append(tuple(sorted(itertools.chain.from_iterable([k] * m for k, m in p.items()))))
    return tuple(out) if n > 0 else ((),)


def bounded_count(k: int, n: int) -> int:
    """Plain recursion: partitions of n with parts <= k."""
    if n == 0:
        return 1
    if k == 0:
        return 0
    return sum(bounded_count(min(p, n - p), n - p) for p in range(1, min(k, n) + 1))


def standard_count(pred, n: int) -> int:
    """Partitions of n with no pair of parts a <= b satisfying pred(a, b)."""
    total = 0
    for lam in partitions(n):
        if not any(pred(lam[s], lam[t]) for s in range(len(lam)) for t in range(s + 1, len(lam))):
            total += 1
    return total


# -- monomial ideals by brute force ---------------------------------------------------------

def monomials(ambient: int, max_deg: int):
    for d in range(max_deg + 1):
        for combo in itertools.combinations_with_replacement(range(ambient), d):
            e = [0] * ambient
            for v in combo:
                e[v] += 1
            yield tuple(e)


def member(gens, m) -> bool:
    return any(all(g[k] <= m[k] for k in range(len(m))) for g in gens)


def mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def power(a, n):
    return tuple(x * n for x in a)


def colon_set(gens, b, ambient, D):
    return {m for m in monomials(ambient, D) if member(gens, mul(m, b))}


def saturate_set(gens, b, ambient, D, reach):
    return {m for m in monomials(ambient, D)
            if any(member(gens, mul(m, power(b, n))) for n in range(reach + 1))}


def radical_set(gens, ambient, D, reach):
    return {m for m in monomials(ambient, D)
            if any(member(gens, power(m, n)) for n in range(1, reach + 1))}


def ideal_set(gens, ambient, D):
    return {m for m in monomials(ambient, D) if member(gens, m)}
