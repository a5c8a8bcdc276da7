"""Leading degrees on S^2(W+) and the U(W+)-module machinery built on them.

A quadratic monomial ``x_i x_j`` (i <= j) has degree ``(i, j)``. Pairs are
ordered by ``i + j`` and then by ``j``; on two-part partitions this is the
partition order from :mod:`wittpoisson.poly`, so leading monomials of reduced
bases are exactly the gamma values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .growth import partitions_of
from .poly import Partition, Poly, monomial_key, u_act, witt_act
from .qij.vectors import PARTITIONS_OF_6
from .subspace import Subspace


@total_ordering
@dataclass(frozen=True)
class GammaPoint:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise ValueError(f"need 1 <= i <= j, got ({self.i}, {self.j})")

    def key(self) -> Tuple[int, int]:
        return (self.i + self.j, self.j)

    def __lt__(self, other: "GammaPoint") -> bool:
        return self.key() < other.key()

    def __add__(self, shift: Tuple[int, int]) -> "GammaPoint":
        return GammaPoint(self.i + shift[0], self.j + shift[1])

    def as_tuple(self) -> Tuple[int, int]:
        return (self.i, self.j)

    @property
    def degree(self) -> int:
        return self.i + self.j


def gamma_precedes(p: Tuple[int, int], q: Tuple[int, int]) -> bool:
    return (p[0] + p[1], p[1]) < (q[0] + q[1], q[1])


def partition_precedes(lam: Partition, mu: Partition) -> bool:
    return monomial_key(lam) < monomial_key(mu)


def _check_quadratic(f: Poly) -> None:
    if not f:
        raise ValueError("gamma of the zero polynomial is undefined")
    for lam in f.terms:
        if len(lam) != 2:
            raise ValueError(f"not an element of S^2: term of order {len(lam)}")


def gamma(f: Poly) -> GammaPoint:
    _check_quadratic(f)
    i, j = f.leading_monomial()
    return GammaPoint(i, j)


ORDER_CHAIN = [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (1, 4), (3, 3)]


def order_chain_check(samples: int = 1000, seed: int = 0) -> Dict:
    """The displayed initial chain, the first pairs in order, and the monomial-order law."""
    pairs = sorted(((i, j) for s in range(2, 8) for i in range(1, s) for j in [s - i] if i <= j),
                   key=lambda p: (p[0] + p[1], p[1]))
    chain_ok = pairs[:len(ORDER_CHAIN)] == ORDER_CHAIN and all(
        gamma_precedes(a, b) for a, b in zip(ORDER_CHAIN, ORDER_CHAIN[1:]))

    rng = random.Random(seed)

    def rand_part() -> Partition:
        return tuple(sorted(rng.randint(1, 6) for _ in range(rng.randint(0, 4))))

    law_ok = True
    for _ in range(samples):
        lam, mu, nu = rand_part(), rand_part(), rand_part()
        if partition_precedes(lam, mu):
            if not partition_precedes(tuple(sorted(lam + nu)), tuple(sorted(mu + nu))):
                law_ok = False
                break
    return {"chain": chain_ok, "monomial_order": law_ok, "pass": chain_ok and law_ok}


# -- module slices --------------------------------------------------------------------

def _check_homogeneous(f: Poly) -> int:
    _check_quadratic(f)
    if not f.is_homogeneous():
        raise ValueError("f must be homogeneous in the degree grading")
    return f.d()


def module_slice(f: Poly, m: int) -> Subspace:
    """Span of ``e_lam . f`` over partitions lam of m, as a reduced basis."""
    _check_homogeneous(f)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return Subspace.span([f])
    return Subspace.span(u_act(lam, f) for lam in partitions_of(m))


def module_slices(f: Poly, m_max: int) -> List[Subspace]:
    """Slices for ``m = 0 .. m_max`` via ``U_m f = sum_k e_k U_{m-k} f``."""
    _check_homogeneous(f)
    slices = [Subspace.span([f])]
    for m in range(1, m_max + 1):
        space = Subspace()
        for k in range(1, m + 1):
            for v in slices[m - k].basis:
                space.absorb(witt_act(k, v))
        slices.append(space.frozen())
    return slices


# -- raising by U(W+)_6 ---------------------------------------------------------------------

def projection_monomials(i: int, j: int) -> List[Partition]:
    return [(i + s, j + 6 - s) for s in range(4)]


def project(g: Poly, i: int, j: int) -> List[Fraction]:
    return [g.coefficient(m) for m in projection_monomials(i, j)]


def _solve(rows: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """One exact solution of ``rows . x = rhs`` (free variables set to 0), or None."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots: List[int] = []
    r = 0
    for c in range(n):
        p = next((k for k in range(r, len(aug)) if aug[k][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for k in range(len(aug)):
            if k != r and aug[k][c]:
                t = aug[k][c]
                aug[k] = [a - t * b for a, b in zip(aug[k], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    if any(row[-1] for row in aug[r:]):
        return None
    x = [Fraction(0)] * n
    for k, c in enumerate(pivots):
        x[c] = aug[k][-1]
    return x


def raise6_images(f: Poly) -> List[List[Fraction]]:
    """``pi_ij(e_lam . f)`` for the 11 partitions of 6, in the fixed order."""
    g = gamma(f)
    return [project(u_act(lam, f), g.i, g.j) for lam in PARTITIONS_OF_6]


def find_raise6(f: Poly, target: int = 3) -> Optional[List[Fraction]]:
    """Coefficients ``alpha`` with ``pi_ij(sum alpha_lam e_lam . f) = x_{i+t} x_{j+6-t}``.

    ``target`` is t; the default 3 raises the leading degree by (3, 3).
    """
    _check_homogeneous(f)
    images = raise6_images(f)
    cols = [[images[c][r] for c in range(len(images))] for r in range(4)]
    rhs = [Fraction(int(r == target)) for r in range(4)]
    return _solve(cols, rhs)


def apply_combination(alpha: Sequence[Fraction], f: Poly) -> Poly:
    out = Poly.zero()
    for a, lam in zip(alpha, PARTITIONS_OF_6):
        if a:
            out = out + u_act(lam, f).scale(a)
    return out


# -- profiles ---------------------------------------------------------------------------------

def gamma_set(slices: Iterable[Subspace]) -> Set[Tuple[int, int]]:
    return {tuple(p) for s in slices for p in s.pivots()}


def expected_cone(f: Poly, m_max: int) -> List[Tuple[int, int]]:
    """``gamma(f) + (0, 4) + {(a, b): 0 <= a <= b}`` cut off at degree ``d(f) + m_max``."""
    g = gamma(f)
    room = m_max - 4
    return [(g.i + a, g.j + 4 + b) for a in range(room + 1) for b in range(a, room - a + 1)]


@dataclass
class GammaProfile:
    gamma: Tuple[int, int]
    m_max: int
    points: List[Tuple[int, int]]
    expected: List[Tuple[int, int]]
    missing: List[Tuple[int, int]]

    @property
    def contains_cone(self) -> bool:
        return not self.missing

    def to_json(self) -> Dict:
        return {"gamma": list(self.gamma), "m_max": self.m_max,
                "profile": [list(p) for p in self.points],
                "cone_size": len(self.expected),
                "missing": [list(p) for p in self.missing],
                "contains_cone": self.contains_cone}


def gamma_profile(f: Poly, m_max: int) -> GammaProfile:
    slices = module_slices(f, m_max)
    pts = gamma_set(slices)
    expected = expected_cone(f, m_max)
    missing = [p for p in expected if p not in pts]
    order = lambda p: (p[0] + p[1], p[1])
    return GammaProfile(gamma(f).as_tuple(), m_max, sorted(pts, key=order), expected, missing)


def sigma_closure_check(f: Poly, m_max: int) -> Dict:
    """Closure of the profile under +(0,1) (when i >= 2) and +(3,3) (when the raise solves)."""
    slices = module_slices(f, m_max)
    pts = gamma_set(slices)
    top = f.d() + m_max
    failures = []
    unsolved = []
    for s in slices:
        for v in s.basis:
            i, j = v.leading_monomial()
            if i >= 2 and i + j + 1 <= top and (i, j + 1) not in pts:
                failures.append([i, j, 0, 1])
            if i + j + 6 <= top:
                if find_raise6(v) is None:
                    unsolved.append([i, j])
                elif (i + 3, j + 3) not in pts:
                    failures.append([i, j, 3, 3])
    return {"pass": not failures, "failures": failures, "raise_unsolved": unsolved}


# -- criticality ----------------------------------------------------------------------------

def s2_dim(d: int) -> int:
    """Number of pairs ``1 <= i <= j`` with ``i + j = d``."""
    return max(d, 0) // 2


def criticality_dims(f: Poly, d_max: int) -> Dict:
    """``dim S^2_d / M_d`` for ``d <= d_max``, with M the submodule generated by f."""
    d0 = _check_homogeneous(f)
    g = gamma(f)
    k, l = g.i, g.j + 4
    slices = module_slices(f, max(d_max - d0, 0)) if d_max >= d0 else []
    rows = []
    cumulative = 0
    ok = True
    for d in range(1, d_max + 1):
        m_dim = slices[d - d0].dim if d >= d0 else 0
        q = s2_dim(d) - m_dim
        cumulative += q
        bound = (k + l) * d
        ok = ok and cumulative <= bound
        rows.append({"d": d, "dim_S2": s2_dim(d), "dim_M": m_dim, "quotient": q,
                     "cumulative": cumulative, "bound": bound})
    return {"gamma": [g.i, g.j], "k": k, "l": l, "rows": rows, "pass": ok}
