"""Finite-dimensional subspaces of S(W+) held as exact reduced row-echelon bases."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from .poly import Partition, Poly, monomial_key


class Subspace:
    """Span of finitely many polynomials.

    The basis is kept fully reduced: each basis vector has leading coefficient 1
    under the partition order, and its leading monomial (its pivot) occurs in no
    other basis vector. Membership is reduction to zero.

    Instances built through :meth:`span`, :meth:`extend` and :meth:`union` are
    never mutated afterwards; :meth:`absorb` is for builders that own their copy.
    """

    __slots__ = ("_rows", "degree_bound", "_frozen")

    def __init__(self, degree_bound: Optional[int] = None):
        self._rows: Dict[Partition, Dict[Partition, Fraction]] = {}
        self.degree_bound = degree_bound
        self._frozen = False

    @classmethod
    def span(cls, polys: Iterable[Poly], degree_bound: Optional[int] = None) -> "Subspace":
        space = cls(degree_bound)
        for f in polys:
            space.absorb(f)
        return space.frozen()

    def frozen(self) -> "Subspace":
        self._frozen = True
        return self

    def copy(self) -> "Subspace":
        other = Subspace(self.degree_bound)
        other._rows = {p: dict(r) for p, r in self._rows.items()}
        return other

    # -- queries ------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def pivots(self) -> List[Partition]:
        """Leading monomials of the basis, in descending order."""
        return sorted(self._rows, key=monomial_key, reverse=True)

    @property
    def basis(self) -> List[Poly]:
        return [Poly._raw(dict(self._rows[p])) for p in self.pivots()]

    def _reduce_terms(self, terms: Dict[Partition, Fraction]) -> Dict[Partition, Fraction]:
        r = dict(terms)
        rows = self._rows
        for p in [m for m in terms if m in rows]:
            c = r.get(p)
            if not c:
                continue
            for m, v in rows[p].items():
                s = r.get(m, 0) - c * v
                if s:
                    r[m] = s
                else:
                    del r[m]
        return r

    def reduce(self, f: Poly) -> Poly:
        """Normal form of f modulo the subspace."""
        return Poly._raw(self._reduce_terms(f.terms))

    def contains(self, f: Poly) -> bool:
        return not self._reduce_terms(f.terms)

    __contains__ = contains

    def contains_space(self, other: "Subspace") -> bool:
        return all(not self._reduce_terms(r) for r in other._rows.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._rows == other._rows

    # -- construction -------------------------------------------------------

    def absorb(self, f: Poly) -> bool:
        """Add f to the span in place; True when the dimension grew."""
        if self._frozen:
            raise RuntimeError("subspace is frozen; use extend()")
        r = self._reduce_terms(f.terms)
        if not r:
            return False
        piv = max(r, key=monomial_key)
        lc = r[piv]
        if lc != 1:
            inv = 1 / lc
            r = {m: v * inv for m, v in r.items()}
        for row in self._rows.values():
            c = row.get(piv)
            if c:
                for m, v in r.items():
                    s = row.get(m, 0) - c * v
                    if s:
                        row[m] = s
                    else:
                        del row[m]
        self._rows[piv] = r
        return True

    def extend(self, polys: Iterable[Poly]) -> "Subspace":
        other = self.copy()
        for f in polys:
            other.absorb(f)
        return other.frozen()

    def union(self, other: "Subspace") -> "Subspace":
        """The sum of two subspaces."""
        return self.extend(other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.union(other)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim})"


def subspace_ops(vs: Iterable[Poly], op: str, f: Optional[Poly] = None, other=None):
    """Dispatch helper over the four basic subspace operations."""
    space = Subspace.span(vs)
    if op == "reduce":
        return space
    if op == "dim":
        return space.dim
    if op == "contains":
        if f is None:
            raise ValueError("contains needs a polynomial")
        return space.contains(f)
    if op == "sum":
        return space.union(Subspace.span(other or []))
    raise ValueError(f"unknown subspace operation {op!r}")
