"""Fraction-free determinants, maximal minors, gcds and linear-factor search for BiPoly."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .bipoly import BiPoly, ONE, ZERO, linear_form

Matrix = List[List[BiPoly]]


def bareiss_det(M: Sequence[Sequence], *, one=ONE, zero=ZERO,
                div: Optional[Callable] = None):
    """Determinant by Bareiss elimination; every division is exact.

    Works over any integral domain whose elements support ``*``, ``-`` and an
    exact ``div(a, b)``. The defaults are set up for :class:`BiPoly` entries.
    """
    if div is None:
        div = BiPoly.exact_div
    n = len(M)
    if n == 0:
        return one
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    A = [list(row) for row in M]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not A[k][k]:
            for r in range(k + 1, n):
                if A[r][k]:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return zero
        akk = A[k][k]
        rowk = A[k]
        for r in range(k + 1, n):
            rowr = A[r]
            ark = rowr[k]
            for c in range(k + 1, n):
                v = akk * rowr[c] - ark * rowk[c]
                rowr[c] = div(v, prev) if k else v
            rowr[k] = zero
        prev = akk
    det = A[n - 1][n - 1]
    return -det if sign < 0 else det


def int_det(M: Sequence[Sequence[int]]) -> int:
    return bareiss_det(M, one=1, zero=0, div=lambda a, b: a // b)


def cofactor_det(M: Sequence[Sequence]):
    """Laplace expansion along the first row; only sensible for small sizes."""
    n = len(M)
    if n == 0:
        return ONE
    if n == 1:
        return M[0][0]
    total = None
    for c in range(n):
        minor = [row[:c] + row[c + 1:] for row in (list(r) for r in M[1:])]
        term = M[0][c] * cofactor_det(minor)
        if c % 2:
            term = -term
        total = term if total is None else total + term
    return total


def evaluate_matrix(M: Sequence[Sequence[BiPoly]], i, j=0) -> List[List]:
    return [[p.evaluate(i, j) for p in row] for row in M]


def rank_q(rows: Sequence[Sequence]) -> int:
    """Exact rank over the rationals of a numeric matrix."""
    A = [[Fraction(x) for x in row] for row in rows]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        for r in range(rank + 1, len(A)):
            if A[r][c]:
                f = A[r][c] / p
                A[r] = [a - f * b for a, b in zip(A[r], A[rank])]
        rank += 1
        if rank == len(A):
            break
    return rank


def maximal_minors(M: Sequence[Sequence[BiPoly]]) -> List[BiPoly]:
    """All maximal minors, in lexicographic order of the kept row (or column) sets."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if rows >= cols:
        return [bareiss_det([list(M[r]) for r in keep])
                for keep in combinations(range(rows), cols)]
    return [bareiss_det([[row[c] for c in keep] for row in M])
            for keep in combinations(range(cols), rows)]


# -- univariate helpers (dense integer coefficient lists, index = degree) ------

def _trim(p: List) -> List:
    while p and not p[-1]:
        p.pop()
    return p


def _u_content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _u_primitive(p: List[int]) -> List[int]:
    g = _u_content(p)
    if g == 0:
        return []
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _u_prem(a: List[int], b: List[int]) -> List[int]:
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [lb * c for c in a]
        for k, c in enumerate(b):
            a[k + shift] -= la * c
        _trim(a)
    return a


def u_gcd(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Primitive gcd of two integer univariate polynomials (primitive PRS)."""
    a = _u_primitive(_trim(list(a)))
    b = _u_primitive(_trim(list(b)))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _u_prem(a, b)
        a, b = b, _u_primitive(r)
    return _u_primitive(a)


def _to_int_list(p: BiPoly) -> Tuple[List[int], Fraction]:
    """Integer coefficient list of a polynomial in i, and the scale removed."""
    c = p.content()
    q = p * (1 / c)
    return [int(x) for x in q.univariate_i()], c


def _from_list(p: Sequence[int]) -> BiPoly:
    return BiPoly({(a, 0): c for a, c in enumerate(p) if c})


def _content_in_j(f: BiPoly) -> BiPoly:
    """Primitive gcd (in Z[i]) of the coefficients of f viewed in Q[i][j]."""
    g: List[int] = []
    for coeff in f.coeffs_in_j().values():
        g = u_gcd(g, _to_int_list(coeff)[0])
        if len(g) == 1:
            break
    return _from_list(g)


def _prem_j(a: BiPoly, b: BiPoly) -> BiPoly:
    db = b.deg_j()
    bc = b.coeffs_in_j()
    lb = bc[db]
    r = a
    while not r.is_zero() and r.deg_j() >= db:
        dr = r.deg_j()
        lr = r.coeffs_in_j()[dr]
        shifted = BiPoly({(x, y + dr - db): c for (x, y), c in (lr * b).terms.items()})
        r = lb * r - shifted
    return r


def _primitive_j(f: BiPoly) -> BiPoly:
    if f.is_zero():
        return f
    return f.exact_div(_content_in_j(f)).primitive()


def bipoly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Primitive gcd in Z[i, j] (content removed, positive leading coefficient).

    Content in ``i`` is split off first; the primitive parts go through a
    primitive pseudo-remainder sequence in ``j``.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    cf, cg = _content_in_j(f), _content_in_j(g)
    c = _from_list(u_gcd(_to_int_list(cf)[0], _to_int_list(cg)[0]))
    a = f.exact_div(cf).primitive()
    b = g.exact_div(cg).primitive()
    if a.deg_j() < b.deg_j():
        a, b = b, a
    while not b.is_zero() and b.deg_j() > 0:
        r = _prem_j(a, b)
        a, b = b, _primitive_j(r)
    if not b.is_zero():
        # a nonzero remainder free of j: primitive parts are coprime
        a = ONE
    else:
        a = _primitive_j(a)
    return (c * a).primitive()


def gcd_all(polys: Sequence[BiPoly]) -> BiPoly:
    g = ZERO
    for p in polys:
        if p.is_zero():
            continue
        g = p.primitive() if g.is_zero() else bipoly_gcd(g, p)
        if g.is_constant():
            break
    return g


# -- linear factors ------------------------------------------------------------

LinearForm = Tuple[int, int, int]


def normalize_form(alpha: int, beta: int, gamma: int) -> LinearForm:
    """Primitive representative with the first nonzero of (alpha, beta) positive."""
    g = gcd(gcd(alpha, beta), gamma)
    if g == 0:
        raise ValueError("zero linear form")
    alpha, beta, gamma = alpha // g, beta // g, gamma // g
    if alpha < 0 or (alpha == 0 and beta < 0):
        alpha, beta, gamma = -alpha, -beta, -gamma
    return alpha, beta, gamma


def candidate_forms(bound: int) -> List[LinearForm]:
    seen = set()
    out = []
    rng = range(-bound, bound + 1)
    for alpha, beta, gamma in product(rng, rng, rng):
        if alpha == 0 and beta == 0:
            continue
        form = normalize_form(alpha, beta, gamma)
        if form not in seen:
            seen.add(form)
            out.append(form)
    out.sort(key=lambda t: (abs(t[0]) + abs(t[1]) + abs(t[2]), t))
    return out


def _could_vanish(f: BiPoly, form: LinearForm) -> bool:
    # cheap necessary test: f must vanish at rational points of the line
    alpha, beta, gamma = form
    if beta:
        pts = [(Fraction(t), Fraction(-gamma - alpha * t, beta)) for t in (0, 1, -1)]
    else:
        pts = [(Fraction(-gamma, alpha), Fraction(t)) for t in (0, 1, -1)]
    return all(f.evaluate(x, y) == 0 for x, y in pts)


def linear_factors(f: BiPoly, coeff_bound: int = 10
                   ) -> Tuple[List[Tuple[LinearForm, int]], BiPoly]:
    """Extract every primitive integer linear factor with coefficients within the bound.

    Returns ``(forms, residual)`` with ``f = const * prod(form**mult) * residual``;
    the residual has no linear factor within the bound and carries the constant.
    """
    if f.is_zero():
        raise ValueError("linear_factors of the zero polynomial")
    found: List[Tuple[LinearForm, int]] = []
    residual = f
    for form in candidate_forms(coeff_bound):
        if residual.total_degree() < 1:
            break
        if not _could_vanish(residual, form):
            continue
        lf = linear_form(*form)
        mult = 0
        while True:
            q = residual.divide(lf)
            if q is None:
                break
            residual = q
            mult += 1
        if mult:
            found.append((form, mult))
    return found, residual


def format_form(form: LinearForm) -> str:
    return str(linear_form(*form))


# -- resultants ------------------------------------------------------------------

def sylvester_matrix(f: BiPoly, g: BiPoly) -> Matrix:
    """Sylvester matrix of f and g as polynomials in j (entries in Q[i])."""
    m, n = f.deg_j(), g.deg_j()
    fc, gc = f.coeffs_in_j(), g.coeffs_in_j()
    size = m + n
    rows: Matrix = []
    for r in range(n):
        row = [ZERO] * size
        for k in range(m + 1):
            row[r + m - k] = fc.get(k, ZERO)
        rows.append(row)
    for r in range(m):
        row = [ZERO] * size
        for k in range(n + 1):
            row[r + n - k] = gc.get(k, ZERO)
        rows.append(row)
    return rows


def resultant_j(f: BiPoly, g: BiPoly) -> BiPoly:
    """Resultant with respect to j, a polynomial in i."""
    if f.deg_j() < 0 or g.deg_j() < 0:
        return ZERO
    if f.deg_j() == 0 and g.deg_j() == 0:
        return ONE
    return bareiss_det(sylvester_matrix(f, g))


def u_resultant(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Resultant of two rational univariate polynomials (Euclidean algorithm)."""
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    if not a or not b:
        return Fraction(0)
    res = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * b[0] ** da
        # res(a, b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r), r = a mod b
        r = list(a)
        while len(r) - 1 >= db and r:
            q = r[-1] / b[-1]
            s = len(r) - 1 - db
            for k, c in enumerate(b):
                r[k + s] -= q * c
            _trim(r)
        if not r:
            return Fraction(0)
        dr = len(r) - 1
        if (da * db) % 2:
            res = -res
        res *= b[-1] ** (da - dr)
        a, b = b, r
