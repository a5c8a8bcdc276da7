"""Where the raising matrices lose rank: minor gcds, integer scans and the B.C cross-check."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from ..poly import Poly, u_act
from .bipoly import BiPoly
from .linalg import (LinearForm, evaluate_matrix, gcd_all, linear_factors, maximal_minors,
                     rank_q, u_gcd)
from .vectors import (CASE_BETA_LEN, CASE_COLUMNS, CASE_OFFSET, PARTITIONS_OF_6, c_matrix,
                      case_matrix, check_case)

Point = Tuple[object, object]


def full_rank(case: str) -> int:
    return len(CASE_COLUMNS[check_case(case)])


@lru_cache(maxsize=None)
def case_minors(case: str) -> Tuple[BiPoly, ...]:
    return tuple(maximal_minors(case_matrix(case)))


@lru_cache(maxsize=None)
def minor_gcd(case: str) -> BiPoly:
    return gcd_all(case_minors(case))


@lru_cache(maxsize=None)
def _locus(case: str, bound: int):
    g = minor_gcd(case)
    factors, residual = linear_factors(g, bound)
    return g, tuple(factors), residual


def degenerate_locus(case: str, bound: int = 10) -> Dict:
    """Linear components of the common zero set of the maximal minors."""
    g, factors, residual = _locus(check_case(case), bound)
    return {
        "case": case,
        "minors": len(case_minors(case)),
        "gcd_degree": g.total_degree(),
        "factors": [[a, b, c, m] for (a, b, c), m in factors],
        "factor_strings": [form_str(f) for f, _ in factors],
        "residual_degree": residual.total_degree(),
        "residual_constant": residual.is_constant(),
        "gcd_constant": g.is_constant(),
    }


def form_str(form: LinearForm) -> str:
    """``(1, -1, 3)`` as ``i - j + 3``."""
    out = ""
    for coef, name in zip(form, ("i", "j", "")):
        if not coef:
            continue
        mag = abs(coef)
        body = name if mag == 1 and name else (f"{mag}*{name}" if name else str(mag))
        sign = "-" if coef < 0 else "+"
        out = (f"-{body}" if sign == "-" else body) if not out else f"{out} {sign} {body}"
    return out or "0"


def locus_forms(case: str, bound: int = 10) -> List[LinearForm]:
    return [form for form, _ in _locus(check_case(case), bound)[1]]


def factors_divide_minors(case: str, bound: int = 10) -> bool:
    """Trial-divide every maximal minor by every reported linear factor."""
    minors = [m for m in case_minors(case) if not m.is_zero()]
    for a, b, c in locus_forms(case, bound):
        form = BiPoly({(1, 0): a, (0, 1): b, (0, 0): c})
        if any(m.divide(form) is None for m in minors):
            return False
    return True


# -- evaluation -------------------------------------------------------------------------

def rank_at(case: str, i0, j0=None) -> int:
    """Exact rank of the case matrix at a rational point; diagonal cases ignore j0."""
    check_case(case)
    if CASE_OFFSET[case] is None and j0 is None:
        raise ValueError("the general case needs both i and j")
    return rank_q(evaluate_matrix(case_matrix(case), Fraction(i0),
                                  Fraction(j0) if CASE_OFFSET[case] is None else 0))


def on_form(form: LinearForm, i0, j0) -> bool:
    a, b, c = form
    return a * i0 + b * j0 + c == 0


def line_samples(case: str, form: LinearForm, count: int = 3) -> List[Point]:
    """Rational points on a factor line (a single root for the diagonal cases)."""
    a, b, c = form
    if CASE_OFFSET[case] is not None:
        return [(Fraction(-c, a), None)] if a else []
    pts = []
    for t in (5, 11, 17, 23, 29)[:count]:
        if b:
            pts.append((Fraction(t), Fraction(-c - a * t, b)))
        else:
            pts.append((Fraction(-c, a), Fraction(t)))
    return pts


def line_deficiency_check(case: str, bound: int = 10) -> List[Dict]:
    out = []
    n = full_rank(case)
    for form in locus_forms(case, bound):
        pts = line_samples(case, form)
        ranks = [rank_at(case, i0, j0) for i0, j0 in pts]
        out.append({"form": list(form), "points": [[str(i0), None if j0 is None else str(j0)]
                                                  for i0, j0 in pts],
                    "ranks": ranks, "deficient": bool(ranks) and all(r < n for r in ranks)})
    return out


def scan_points(case: str, imin: int, imax: int, joffmax: int = 40) -> List[Point]:
    """Integer points of the scan box; the general case keeps ``j >= i + 7``."""
    if CASE_OFFSET[check_case(case)] is None:
        return [(i, j) for i in range(imin, imax + 1) for j in range(i + 7, i + joffmax + 1)]
    k = CASE_OFFSET[case]
    return [(i, i + k) for i in range(imin, imax + 1)]


def rank_scan(case: str, imin: int, imax: int, joffmax: int = 40, bound: int = 10) -> Dict:
    """Rank-deficient points of the box and the least i past which none occurs."""
    n = full_rank(case)
    forms = locus_forms(case, bound)
    deficient = []
    for i0, j0 in scan_points(case, imin, imax, joffmax):
        if rank_at(case, i0, j0) < n:
            j_eff = j0 if CASE_OFFSET[case] is None else 0
            deficient.append({"point": [i0, j0],
                              "on_locus": [list(f) for f in forms if on_form(f, i0, j_eff)]})
    empirical_n = max((d["point"][0] for d in deficient), default=imin - 1) + 1
    return {
        "case": case,
        "box": {"imin": imin, "imax": imax, "joffmax": joffmax},
        "points": len(scan_points(case, imin, imax, joffmax)),
        "scan_deficiencies": deficient,
        "unexplained": [d["point"] for d in deficient if not d["on_locus"]],
        "empirical_N": empirical_n,
        "empirical_N_label": "empirical, from this scan only; not certified",
    }


# -- the B.C cross-check -------------------------------------------------------------------

def case_polynomial(case: str, i0: int, j0: Optional[int], beta: Sequence) -> Tuple[Poly, int, int]:
    """``f = x_i x_j + sum_t beta_t x_{i+t} x_{j-t}`` for the case's shape."""
    check_case(case)
    if len(beta) != CASE_BETA_LEN[case]:
        raise ValueError(f"case {case} takes {CASE_BETA_LEN[case]} beta values, got {len(beta)}")
    if CASE_OFFSET[case] is not None:
        j0 = i0 + CASE_OFFSET[case]
    elif j0 is None or j0 < i0 + 7:
        raise ValueError("the general case needs j >= i + 7")
    if i0 < 1:
        raise ValueError("i must be >= 1")
    f = Poly.monomial((i0, j0))
    for t, b in enumerate(beta, start=1):
        if i0 + t > j0 - t:
            raise ValueError(f"beta_{t} term x{i0 + t}*x{j0 - t} is not below x{i0}*x{j0}")
        f = f + Poly.monomial((i0 + t, j0 - t), Fraction(b))
    return f, i0, j0


def symbolic_projection(case: str, i0: int, j0: int, beta: Sequence, alpha: Sequence) -> List[Fraction]:
    """``alpha . B(i0, j0) . C(beta)``."""
    B = evaluate_matrix(case_matrix(case), Fraction(i0), Fraction(j0))
    C = c_matrix(case, [Fraction(b) for b in beta])
    row = [sum(Fraction(a) * B[r][c] for r, a in enumerate(alpha)) for c in range(len(C))]
    return [sum(row[c] * C[c][s] for c in range(len(C))) for s in range(4)]


def direct_projection(f: Poly, i0: int, j0: int, alpha: Sequence) -> List[Fraction]:
    """``pi_ij(p . f)`` with ``p = sum alpha_lam e_lam``, through the action itself."""
    g = Poly.zero()
    for a, lam in zip(alpha, PARTITIONS_OF_6):
        if a:
            g = g + u_act(lam, f).scale(a)
    return [g.coefficient((i0 + s, j0 + 6 - s)) for s in range(4)]


def bc_crosscheck(case: str, i0: int, j0: Optional[int], beta: Sequence,
                  trials: int = 20, seed: int = 0) -> Dict:
    f, i0, j0 = case_polynomial(case, i0, j0, beta)
    rng = random.Random(seed)
    mismatches = []
    for t in range(trials):
        alpha = [rng.randint(-9, 9) for _ in PARTITIONS_OF_6]
        sym = symbolic_projection(case, i0, j0, beta, alpha)
        direct = direct_projection(f, i0, j0, alpha)
        if sym != direct:
            mismatches.append({"trial": t, "alpha": alpha,
                               "symbolic": [str(x) for x in sym],
                               "direct": [str(x) for x in direct]})
    return {"case": case, "point": [i0, j0], "beta": [str(Fraction(b)) for b in beta],
            "trials": trials, "pass": not mismatches, "mismatches": mismatches}


# -- isolated points --------------------------------------------------------------------------

def _int_coeffs_in_j(p: BiPoly, i0: int) -> List[int]:
    """``p(i0, j)`` as an integer coefficient list in j (scaled, same roots)."""
    coeffs = p.coeffs_in_j()
    vals = [Fraction(coeffs[k].evaluate(i0, 0)) if k in coeffs else Fraction(0)
            for k in range(max(coeffs, default=-1) + 1)]
    scale = lcm(*(v.denominator for v in vals)) if vals else 1
    return [int(v * scale) for v in vals]


def _int_roots_in(poly: Sequence[int], lo: int, hi: int) -> List[int]:
    return [t for t in range(lo, hi + 1) if sum(c * t ** k for k, c in enumerate(poly)) == 0]


def isolated_candidates_from_minors(minors: Sequence[BiPoly], i_window: Tuple[int, int],
                                    j_window: Tuple[int, int]) -> Dict:
    """Common zeros of the minors off their gcd, probed pointwise in i.

    Every minor is divided by the gcd of all minors. At each integer i of the
    window the reduced minors become polynomials in j; their common integer
    roots in the j window (roots of the univariate gcd) are the candidates.
    """
    nonzero = [m for m in minors if not m.is_zero()]
    if not nonzero:
        return {"pass": False, "reason": "all minors vanish", "candidates": []}
    g = gcd_all(nonzero)
    reduced = [m.exact_div(g) for m in nonzero]
    candidates = []
    for i0 in range(i_window[0], i_window[1] + 1):
        h: List[int] = []
        for m in reduced:
            p = _int_coeffs_in_j(m, i0)
            if not any(p):
                continue
            h = u_gcd(h, p)
            if len(h) == 1:
                break
        if len(h) < 2:
            # a constant gcd means no common root; an empty one cannot occur off the gcd
            continue
        for j0 in _int_roots_in(h, *j_window):
            if all(m.evaluate(i0, j0) == 0 for m in reduced):
                candidates.append([i0, j0])
    return {"pass": True, "candidates": candidates,
            "window": {"i": list(i_window), "j": list(j_window)}}


def isolated_candidates(case: str = "general", i_window: Tuple[int, int] = (-10, 60),
                        j_window: Tuple[int, int] = (-10, 110)) -> Dict:
    if check_case(case) != "general":
        raise ValueError("isolated_candidates is defined for the general case")
    out = isolated_candidates_from_minors(case_minors(case), i_window, j_window)
    n = full_rank(case)
    out["verified"] = [{"point": p, "rank": rank_at(case, *p), "deficient": rank_at(case, *p) < n}
                       for p in out["candidates"]]
    return out
