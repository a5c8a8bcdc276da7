"""Poisson growth of subspaces of S(W+), quadratic pattern ideals and partition counts.

``V^{n}`` is the Poisson power: ``V^{0} = span(1)`` and
``V^{n+1} = V V^{n} + {V, V^{n}}``; ``pd_V(n)`` is the dimension of the sum of
the first ``n + 1`` powers. Quotients by monomial ideals generated by
quadratic patterns are taken by discarding matching monomials after every
product and bracket.
"""

from __future__ import annotations

import math
from fractions import Fraction
import statistics
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .poly import Partition, Poly, poisson_bracket, witt_act
from .subspace import Subspace


# -- quadratic patterns -------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticPattern:
    """A predicate on pairs ``i <= j``; the ideal is generated by the matching ``x_i x_j``."""

    name: str
    predicate: Callable[[int, int], bool] = field(compare=False)
    k: Optional[int] = None
    l: Optional[int] = None

    @classmethod
    def jkl(cls, k: int, l: int) -> "QuadraticPattern":
        if not 1 <= k <= l:
            raise ValueError(f"J(k, l) needs 1 <= k <= l, got k={k}, l={l}")
        gap = l - k
        return cls(f"jkl:{k},{l}", lambda i, j: i >= k and j - i >= gap, k, l)

    @classmethod
    def all(cls) -> "QuadraticPattern":
        return cls("all", lambda i, j: True)

    @classmethod
    def parse(cls, text: str) -> "QuadraticPattern":
        text = text.strip().lower()
        if text == "all":
            return cls.all()
        if text.startswith("jkl:"):
            try:
                k, l = (int(t) for t in text[4:].split(","))
            except ValueError:
                raise ValueError(f"bad pattern {text!r}; expected jkl:K,L") from None
            return cls.jkl(k, l)
        raise ValueError(f"unknown pattern {text!r}; expected 'all' or 'jkl:K,L'")

    def __call__(self, i: int, j: int) -> bool:
        return self.predicate(min(i, j), max(i, j))

    def kills(self, lam: Partition) -> bool:
        """True when the monomial ``x_lam`` lies in the pattern ideal."""
        n = len(lam)
        for a in range(n):
            for b in range(a + 1, n):
                if self.predicate(lam[a], lam[b]):
                    return True
        return False

    def reduce(self, f: Poly) -> Poly:
        return f.truncate(lambda lam: not self.kills(lam))

    def poisson_violations(self, index_bound: int = 12) -> List[Tuple[int, int, int]]:
        """Sampled failures of Poisson stability: ``(i, j, k)`` with ``e_k . x_i x_j`` not in the ideal.

        Stability under ``e_1`` and ``e_2`` is enough since they generate W+.
        """
        bad = []
        for i in range(1, index_bound + 1):
            for j in range(i, index_bound + 1):
                if not self.predicate(i, j):
                    continue
                g = Poly.monomial((i, j))
                for k in (1, 2):
                    if any(not self.kills(lam) for lam, _ in witt_act(k, g)):
                        bad.append((i, j, k))
        return bad


# -- graded spans ----------------------------------------------------------------------

class _GradedSpan:
    """Span split into (d, o) blocks when every vector is bihomogeneous."""

    def __init__(self, graded: bool):
        self.graded = graded
        self.blocks: Dict[object, Subspace] = {}

    def _key(self, f: Poly):
        if not self.graded:
            return None
        lam = next(iter(f.terms))
        return (sum(lam), len(lam))

    def absorb(self, f: Poly) -> bool:
        if not f:
            return False
        key = self._key(f)
        block = self.blocks.get(key)
        if block is None:
            block = self.blocks[key] = Subspace()
        return block.absorb(f)

    def contains(self, f: Poly) -> bool:
        if not f:
            return True
        if self.graded:
            parts: Dict[object, Dict] = {}
            for lam, c in f.terms.items():
                parts.setdefault((sum(lam), len(lam)), {})[lam] = c
            for key, terms in parts.items():
                block = self.blocks.get(key)
                if block is None or not block.contains(Poly._raw(terms)):
                    return False
            return True
        block = self.blocks.get(None)
        return block is not None and block.contains(f)

    @property
    def dim(self) -> int:
        return sum(b.dim for b in self.blocks.values())

    def basis(self) -> List[Poly]:
        out = []
        for key in sorted(self.blocks, key=lambda k: (k is None, k)):
            out.extend(self.blocks[key].basis)
        return out

    def to_subspace(self) -> Subspace:
        return Subspace.span(self.basis())

    def max_degree(self) -> int:
        return max((f.d() for b in self.blocks.values() for f in b.basis), default=0)


def _as_list(V) -> List[Poly]:
    if isinstance(V, Subspace):
        return V.basis
    return [f for f in V if f]


def _all_bihomogeneous(polys: Sequence[Poly]) -> bool:
    return all(f.is_bihomogeneous() for f in polys)


def _step(V: List[Poly], prev: List[Poly], graded: bool,
          quotient: Optional[QuadraticPattern]) -> _GradedSpan:
    nxt = _GradedSpan(graded)
    for v in V:
        for w in prev:
            for h in (v * w, poisson_bracket(v, w)):
                if quotient is not None:
                    h = quotient.reduce(h)
                nxt.absorb(h)
    return nxt


def poisson_powers(V, n_max: int, quotient: Optional[QuadraticPattern] = None
                   ) -> Iterator[Tuple[int, _GradedSpan]]:
    """Yield ``(n, V^{n})`` for ``n = 0 .. n_max``."""
    gens = _as_list(V)
    if quotient is not None:
        gens = [g for g in (quotient.reduce(f) for f in gens) if g]
    graded = _all_bihomogeneous(gens)
    cur = _GradedSpan(graded)
    cur.absorb(Poly.const(1))
    yield 0, cur
    base = _GradedSpan(graded)
    for g in gens:
        base.absorb(g)
    V_basis = base.basis()
    for n in range(1, n_max + 1):
        cur = base if n == 1 else _step(V_basis, cur.basis(), graded, quotient)
        yield n, cur


def v_power(V, n: int, quotient: Optional[QuadraticPattern] = None) -> Subspace:
    """Exact basis of the Poisson power ``V^{n}`` (or its image in the quotient)."""
    for k, space in poisson_powers(V, n, quotient):
        if k == n:
            return space.to_subspace()
    raise AssertionError("unreachable")


@dataclass
class GrowthRow:
    n: int
    dim_Vn: int
    pd: int
    max_degree: int
    truncated: bool = False


@dataclass
class GrowthTable:
    rows: List[GrowthRow]
    slope_estimate: Optional[float]
    quotient: Optional[str]
    slope_label: str = "empirical least-squares slope of log pd vs log n over the top half"

    def pd(self) -> List[int]:
        return [r.pd for r in self.rows]

    def to_json(self) -> Dict:
        return {
            "quotient": self.quotient,
            "rows": [{"n": r.n, "dim_Vn": r.dim_Vn, "pd": r.pd, "max_degree": r.max_degree,
                      "truncated": r.truncated} for r in self.rows],
            "slope_estimate": self.slope_estimate,
            "slope_label": self.slope_label,
        }


def loglog_slope(ns: Sequence[int], values: Sequence[int]) -> Optional[float]:
    pts = [(math.log(n), math.log(v)) for n, v in zip(ns, values) if n >= 1 and v > 0]
    if len(pts) < 2:
        return None
    xs, ys = zip(*pts)
    if len(set(xs)) < 2:
        return None
    return statistics.linear_regression(xs, ys).slope


def pd_table(V, n_max: int, quotient: Optional[QuadraticPattern] = None) -> GrowthTable:
    """``pd_V(n)`` for ``n = 0 .. n_max``, with an empirical log-log slope."""
    gens = _as_list(V)
    total: Optional[_GradedSpan] = None
    rows = []
    for n, space in poisson_powers(gens, n_max, quotient):
        if total is None:
            total = _GradedSpan(space.graded)
        for f in space.basis():
            total.absorb(f)
        rows.append(GrowthRow(n, space.dim, total.dim, space.max_degree()))
    top = [r for r in rows if r.n >= max(1, n_max // 2)]
    slope = loglog_slope([r.n for r in top], [r.pd for r in top])
    return GrowthTable(rows, slope, quotient.name if quotient else None)


def cumulative_span(V, n: int, quotient: Optional[QuadraticPattern] = None) -> Subspace:
    """Sum of ``V^{0} .. V^{n}`` as one subspace, spanned from scratch."""
    polys: List[Poly] = []
    for _, space in poisson_powers(V, n, quotient):
        polys.extend(space.basis())
    return Subspace.span(polys)


# -- good growth -------------------------------------------------------------------------

def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n as ascending tuples, optionally with all parts <= max_part."""
    if max_part is None:
        max_part = n

    def rec(rem: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield rest + (p,)

    yield from rec(n, max_part)


def degree_filtration_monomials(n: int) -> List[Partition]:
    """Monomial basis of ``F^n``: every monomial of d-degree at most n."""
    return [lam for m in range(n + 1) for lam in partitions_of(m)]


def good_growth_check(n_max: int) -> Dict:
    """Check ``F^n`` lies in ``V^{0} + ... + V^{n}`` for ``V = span(x1, x2)``, all ``n <= n_max``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    V = [Poly.x(1), Poly.x(2)]
    total = _GradedSpan(True)
    steps = []
    first_failure = None
    for n, space in poisson_powers(V, n_max):
        for f in space.basis():
            total.absorb(f)
        missing = [lam for m in range(n + 1) for lam in partitions_of(m)
                   if not total.contains(Poly.monomial(lam))]
        steps.append({"n": n, "dim_F": len(degree_filtration_monomials(n)),
                      "pd": total.dim, "contained": not missing})
        if missing and first_failure is None:
            first_failure = {"n": n, "monomial": list(missing[0])}
    return {"V": ["x1", "x2"], "n_max": n_max, "pass": first_failure is None,
            "first_failure": first_failure, "steps": steps}


def generator_witnesses(m_max: int) -> List[Dict]:
    """For ``3 <= m <= m_max``: ``{x1, x_{m-1}} = (m-2) x_m`` and ``x_m`` in ``V^{m-1}``."""
    V = [Poly.x(1), Poly.x(2)]
    powers = {n: space for n, space in poisson_powers(V, m_max)}
    out = []
    for m in range(3, m_max + 1):
        lam = Fraction(1, m - 2)
        identity = poisson_bracket(Poly.x(1), Poly.x(m - 1)).scale(lam) == Poly.x(m)
        out.append({"m": m, "lambda": f"1/{m - 2}", "identity": identity,
                    "in_V_power_m_minus_1": powers[m - 1].contains(Poly.x(m))})
    return out


def subalgebra_dim(gens: Sequence[Poly], quotient: Optional[QuadraticPattern] = None,
                   max_order: int = 20) -> Optional[int]:
    """Dimension of the commutative subalgebra generated by ``gens`` (None if not finite by max_order)."""
    if quotient is not None:
        gens = [quotient.reduce(g) for g in gens]
    gens = [g for g in gens if g]
    space = Subspace()
    space.absorb(Poly.const(1))
    frontier = [Poly.const(1)]
    for _ in range(max_order + 1):
        new = []
        for f in frontier:
            for g in gens:
                h = f * g
                if quotient is not None:
                    h = quotient.reduce(h)
                if space.absorb(h):
                    new.append(h)
        if not new:
            return space.dim
        frontier = new
    return None


# -- partition counting -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bounded_table(k: int, n_max: int) -> Tuple[int, ...]:
    ways = [1] + [0] * n_max
    for part in range(1, k + 1):
        for m in range(part, n_max + 1):
            ways[m] += ways[m - part]
    return tuple(ways)


def bounded_partitions(k: int, n: int) -> int:
    """Number of partitions of n with every part at most k."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    if k == 0:
        return 1 if n == 0 else 0
    return _bounded_table(k, n)[n]


def partition_number(n: int) -> int:
    return bounded_partitions(n, n) if n > 0 else 1


def _window_table(b: int, w: int, n_max: int) -> List[int]:
    """Partitions of m into parts from ``b .. b + w - 1`` for ``m = 0 .. n_max``."""
    ways = [1] + [0] * n_max
    for part in range(b, b + w):
        for m in range(part, n_max + 1):
            ways[m] += ways[m - part]
    return ways


def f_counts(k: int, l: int, n: int) -> Tuple[int, int, int]:
    """Sizes of the three classes of partitions of n avoiding ``J(k, l)``.

    ``f1``: largest part below k. ``f2``: exactly one part at least k.
    ``f3``: at least two parts at least k, all within ``l - k - 1`` of the smallest of them.
    """
    if not 1 <= k <= l:
        raise ValueError(f"need 1 <= k <= l, got k={k}, l={l}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    small = _bounded_table(k - 1, n) if k > 1 else tuple([1] + [0] * n)
    f1 = small[n]
    f2 = sum(small[n - b] for b in range(k, n + 1))
    w = l - k
    f3 = 0
    if w > 0:
        for b in range(k, n // 2 + 1):
            # large parts: one copy of b, then at least one more from the window
            win = _window_table(b, w, n - b)
            for m in range(b, n - b + 1):
                f3 += win[m] * small[n - b - m]
    return f1, f2, f3


def _count_standard_enum(pattern: QuadraticPattern, n: int) -> int:
    """Partitions of n with no matching pair, by pruned depth-first enumeration."""

    def rec(rem: int, min_part: int, parts: Tuple[int, ...]) -> int:
        if rem == 0:
            return 1
        total = 0
        for p in range(min_part, rem + 1):
            if any(pattern.predicate(q, p) for q in parts):
                continue
            if p * 2 <= rem and pattern.predicate(p, p):
                # p can only be the last part
                total += 1 if p == rem else 0
                continue
            total += rec(rem - p, p, parts + (p,))
        return total

    return rec(n, 1, ())


def quotient_dims(pattern: QuadraticPattern, n_max: int) -> List[int]:
    """Number of standard monomials of d-degree n, for ``n = 0 .. n_max``."""
    if pattern.k is not None:
        return [sum(f_counts(pattern.k, pattern.l, n)) for n in range(n_max + 1)]
    return [_count_standard_enum(pattern, n) for n in range(n_max + 1)]


def quotient_dims_enumerated(pattern: QuadraticPattern, n_max: int) -> List[int]:
    """Same counts as :func:`quotient_dims`, always by direct enumeration."""
    return [_count_standard_enum(pattern, n) for n in range(n_max + 1)]
