"""Coefficient vectors of the degree-6 action on ``x_i x_j`` and the case matrices.

Row ``r`` of every vector and matrix is indexed by the r-th entry of
:data:`PARTITIONS_OF_6`; ``v[k][r]`` is the coefficient of ``x_{i+k} x_{j+6-k}``
in ``e_lambda . x_i x_j`` for ``lambda = PARTITIONS_OF_6[r]``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .bipoly import BiPoly, I, J

# frozen row order, shared with s2_gamma
PARTITIONS_OF_6: Tuple[Tuple[int, ...], ...] = (
    (6,),
    (1, 5),
    (2, 4),
    (1, 1, 4),
    (3, 3),
    (1, 2, 3),
    (1, 1, 1, 3),
    (2, 2, 2),
    (1, 1, 2, 2),
    (1, 1, 1, 1, 2),
    (1, 1, 1, 1, 1, 1),
)

CASES = ("general", "d6", "d5", "d4", "d3", "d2", "d1", "d0")

Vector = List[BiPoly]


@lru_cache(maxsize=None)
def _tables() -> Tuple[Tuple[BiPoly, ...], ...]:
    i, j = I, J
    v0 = [
        j - 6,
        (j + 4) * (j - 5),
        (j + 2) * (j - 4),
        (j + 4) * (j + 3) * (j - 4),
        j * (j - 3),
        (j + 4) * (j + 1) * (j - 3),
        (j + 4) * (j + 3) * (j + 2) * (j - 3),
        (j + 2) * j * (j - 2),
        (j + 4) * (j + 3) * j * (j - 2),
        (j + 4) * (j + 3) * (j + 2) * (j + 1) * (j - 2),
        (j + 4) * (j + 3) * (j + 2) * (j + 1) * j * (j - 1),
    ]
    v1 = [
        BiPoly(),
        (i - 1) * (j - 5),
        BiPoly(),
        2 * (i - 1) * (j + 3) * (j - 4),
        BiPoly(),
        (i - 1) * (j + 1) * (j - 3),
        3 * (i - 1) * (j + 3) * (j + 2) * (j - 3),
        BiPoly(),
        2 * (i - 1) * (j + 3) * j * (j - 2),
        4 * (i - 1) * (j + 3) * (j + 2) * (j + 1) * (j - 2),
        6 * (i - 1) * (j + 3) * (j + 2) * (j + 1) * j * (j - 1),
    ]
    v2 = [
        BiPoly(),
        BiPoly(),
        (i - 2) * (j - 4),
        i * (i - 1) * (j - 4),
        BiPoly(),
        (i - 2) * (j + 2) * (j - 3),
        3 * i * (i - 1) * (j + 2) * (j - 3),
        3 * (i - 2) * j * (j - 2),
        i * (i - 1) * j * (j - 2) + 2 * (i - 2) * (j + 2) * (j + 1) * (j - 2),
        6 * i * (i - 1) * (j + 2) * (j + 1) * (j - 2)
        + (i - 2) * (j + 2) * (j + 1) * j * (j - 1),
        15 * i * (i - 1) * (j + 2) * (j + 1) * j * (j - 1),
    ]
    v3 = [
        BiPoly(),
        BiPoly(),
        BiPoly(),
        BiPoly(),
        2 * (i - 3) * (j - 3),
        (i + 1) * (i - 2) * (j - 3) + (i - 3) * (j + 1) * (j - 2),
        (i + 1) * i * (i - 1) * (j - 3) + (i - 3) * (j + 1) * j * (j - 1),
        BiPoly(),
        4 * (i + 1) * (i - 2) * (j + 1) * (j - 2),
        4 * (i + 1) * i * (i - 1) * (j + 1) * (j - 2)
        + 4 * (i + 1) * (i - 2) * (j + 1) * j * (j - 1),
        20 * (i + 1) * i * (i - 1) * (j + 1) * j * (j - 1),
    ]
    v4 = [
        BiPoly(),
        BiPoly(),
        (i - 4) * (j - 2),
        (i - 4) * j * (j - 1),
        BiPoly(),
        (i + 2) * (i - 3) * (j - 2),
        3 * (i + 2) * (i - 3) * j * (j - 1),
        3 * i * (i - 2) * (j - 2),
        2 * (i + 2) * (i + 1) * (i - 2) * (j - 2) + i * (i - 2) * j * (j - 1),
        (i + 2) * (i + 1) * i * (i - 1) * (j - 2)
        + 6 * (i + 2) * (i + 1) * (i - 2) * j * (j - 1),
        15 * (i + 2) * (i + 1) * i * (i - 1) * j * (j - 1),
    ]
    v5 = [
        BiPoly(),
        (i - 5) * (j - 1),
        BiPoly(),
        2 * (i + 3) * (i - 4) * (j - 1),
        BiPoly(),
        (i + 1) * (i - 3) * (j - 1),
        3 * (i + 3) * (i + 2) * (i - 3) * (j - 1),
        BiPoly(),
        2 * (i + 3) * i * (i - 2) * (j - 1),
        4 * (i + 3) * (i + 2) * (i + 1) * (i - 2) * (j - 1),
        6 * (i + 3) * (i + 2) * (i + 1) * i * (i - 1) * (j - 1),
    ]
    v6 = [
        i - 6,
        (i + 4) * (i - 5),
        (i + 2) * (i - 4),
        (i + 4) * (i + 3) * (i - 4),
        i * (i - 3),
        (i + 4) * (i + 1) * (i - 3),
        (i + 4) * (i + 3) * (i + 2) * (i - 3),
        (i + 2) * i * (i - 2),
        (i + 4) * (i + 3) * i * (i - 2),
        (i + 4) * (i + 3) * (i + 2) * (i + 1) * (i - 2),
        (i + 4) * (i + 3) * (i + 2) * (i + 1) * i * (i - 1),
    ]
    return tuple(tuple(v) for v in (v0, v1, v2, v3, v4, v5, v6))


def v_vectors() -> List[Vector]:
    """The seven coefficient vectors ``v_0 .. v_6``, each of length 11."""
    return [list(v) for v in _tables()]


# A column is (sum of v-indices, shift along the anti-diagonal).
# (ks, t) evaluates sum(v_k for k in ks) at (i + t, j - t).
ColumnSpec = Tuple[Tuple[int, ...], int]

# offsets j - i of the diagonal cases; None = general (j free)
CASE_OFFSET: Dict[str, object] = {
    "general": None, "d6": 6, "d5": 5, "d4": 4, "d3": 3, "d2": 2, "d1": 1, "d0": 0,
}

CASE_COLUMNS: Dict[str, Tuple[ColumnSpec, ...]] = {
    "general": (
        ((0,), 0), ((1,), 0), ((2,), 0), ((3,), 0),
        ((0,), 1), ((1,), 1), ((2,), 1),
        ((0,), 2), ((1,), 2),
        ((0,), 3),
    ),
    "d6": (
        ((0,), 0), ((1,), 0), ((2,), 0), ((3,), 0),
        ((0,), 1), ((1,), 1), ((2,), 1),
        ((0,), 2), ((1,), 2),
        ((0, 6), 3),
    ),
    "d5": (
        ((0,), 0), ((1,), 0), ((2,), 0), ((3,), 0),
        ((0,), 1), ((1,), 1), ((2,), 1),
        ((0,), 2), ((1, 6), 2),
    ),
    "d4": (
        ((0,), 0), ((1,), 0), ((2,), 0), ((3,), 0),
        ((0,), 1), ((1,), 1), ((2, 6), 1),
        ((0, 6), 2), ((1, 5), 2),
    ),
    "d3": (
        ((0,), 0), ((1,), 0), ((2,), 0), ((3, 6), 0),
        ((0,), 1), ((1, 6), 1), ((2, 5), 1),
    ),
    "d2": (
        ((0,), 0), ((1,), 0), ((2, 6), 0), ((3, 5), 0),
        ((0, 6), 1), ((1, 5), 1), ((2, 4), 1),
    ),
    "d1": (((0,), 0), ((1, 6), 0), ((2, 5), 0), ((3, 4), 0)),
    "d0": (((0, 6), 0), ((1, 5), 0), ((2, 4), 0), ((3,), 0)),
}

# number of beta coefficients in f = x_i x_j + sum_k beta_k x_{i+k} x_{j-k}
CASE_BETA_LEN: Dict[str, int] = {
    "general": 3, "d6": 3, "d5": 2, "d4": 2, "d3": 1, "d2": 1, "d1": 0, "d0": 0,
}


def check_case(case: str) -> str:
    if case not in CASE_COLUMNS:
        raise ValueError(f"unknown case {case!r}; expected one of {', '.join(CASES)}")
    return case


def _column(spec: ColumnSpec) -> Vector:
    ks, t = spec
    tables = _tables()
    col = []
    for r in range(11):
        entry = BiPoly()
        for k in ks:
            entry = entry + tables[k][r]
        col.append(entry.shift(t, -t) if t else entry)
    return col


@lru_cache(maxsize=None)
def _case_matrix(case: str) -> Tuple[Tuple[BiPoly, ...], ...]:
    cols = [_column(spec) for spec in CASE_COLUMNS[check_case(case)]]
    offset = CASE_OFFSET[case]
    if offset is not None:
        cols = [[p.on_diagonal(offset) for p in col] for col in cols]
    return tuple(tuple(cols[c][r] for c in range(len(cols))) for r in range(11))


def case_matrix(case: str) -> List[List[BiPoly]]:
    """The 11-row matrix ``B`` (general) or ``B_k`` (``dk``) as a list of rows.

    For the diagonal cases ``j`` has already been replaced by ``i + k``.
    """
    return [list(row) for row in _case_matrix(case)]


def c_matrix(case: str, beta: Sequence) -> List[List]:
    """The matrix ``C`` (or ``C'``, ``C''``, identity) pairing ``B`` columns with X.

    Column ``(ks, t)`` of ``B`` contributes to ``x_{i+t+min(ks)} x_{j+6-t-min(ks)}``
    with weight ``beta_t`` (``beta_0 = 1``).
    """
    check_case(case)
    if len(beta) != CASE_BETA_LEN[case]:
        raise ValueError(
            f"case {case} takes {CASE_BETA_LEN[case]} beta values, got {len(beta)}"
        )
    weights = [1, *beta]
    rows = []
    for ks, t in CASE_COLUMNS[case]:
        row = [0, 0, 0, 0]
        row[t + min(ks)] = weights[t]
        rows.append(row)
    return rows
