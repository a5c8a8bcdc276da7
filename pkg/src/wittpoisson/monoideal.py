"""Monomial ideals in ``x1 .. xm``: colon, saturation, radical, intersection, hat-plus, minimal primes.

Monomials are exponent vectors of length ``m``. Every operation returns an ideal
with a minimal generating set in a canonical order, so ideals compare with ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
MonomialLike = Union[Exponents, Sequence[int]]


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens: Iterable[Exponents]) -> Tuple[Exponents, ...]:
    uniq = sorted(set(gens), key=lambda e: (sum(e), e))
    kept: List[Exponents] = []
    for g in uniq:
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    ambient: int
    gens: Tuple[Exponents, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.ambient or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for {self.ambient} variables")
        object.__setattr__(self, "gens", _minimalize(tuple(g) for g in self.gens))

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_exponents(cls, ambient: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(ambient, tuple(tuple(g) for g in gens))

    @classmethod
    def from_partitions(cls, ambient: int, parts: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(ambient, tuple(partition_to_exponents(p, ambient) for p in parts))

    @classmethod
    def zero(cls, ambient: int) -> "MonomialIdeal":
        return cls(ambient, ())

    @classmethod
    def unit(cls, ambient: int) -> "MonomialIdeal":
        return cls(ambient, ((0,) * ambient,))

    @classmethod
    def variables(cls, ambient: int, idx: Iterable[int]) -> "MonomialIdeal":
        """Prime ideal generated by the listed variables (1-based)."""
        gens = []
        for k in idx:
            e = [0] * ambient
            e[k - 1] = 1
            gens.append(tuple(e))
        return cls(ambient, tuple(gens))

    # -- predicates --------------------------------------------------------------

    def is_unit(self) -> bool:
        return (0,) * self.ambient in self.gens

    def is_zero(self) -> bool:
        return not self.gens

    def contains_monomial(self, m: MonomialLike) -> bool:
        m = self._mono(m)
        return any(_divides(g, m) for g in self.gens)

    def contains(self, f) -> bool:
        """Membership of a polynomial: every one of its monomials must lie in the ideal."""
        return all(self.contains_monomial(partition_to_exponents(lam, self.ambient))
                   for lam, _ in f)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains_monomial(g) for g in other.gens)

    def is_radical(self) -> bool:
        return all(max(g, default=0) <= 1 for g in self.gens)

    def partitions(self) -> List[Tuple[int, ...]]:
        return [exponents_to_partition(g) for g in self.gens]

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def _mono(self, m: MonomialLike) -> Exponents:
        m = tuple(m)
        if len(m) != self.ambient:
            raise ValueError(f"monomial {m} does not live in {self.ambient} variables")
        return m

    def __str__(self) -> str:
        from .exprio import render_monomial

        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(render_monomial(p) or "1" for p in self.partitions()) + ")"

    def to_json(self) -> Dict:
        return {"vars": self.ambient, "gens": [list(g) for g in self.gens]}


def partition_to_exponents(lam: Sequence[int], ambient: int) -> Exponents:
    e = [0] * ambient
    for a in lam:
        if a > ambient:
            raise ValueError(f"x{a} is outside the {ambient} ambient variables")
        e[a - 1] += 1
    return tuple(e)


def exponents_to_partition(e: Sequence[int]) -> Tuple[int, ...]:
    return tuple(k + 1 for k, m in enumerate(e) for _ in range(m))


def _check_same(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ambient != J.ambient:
        raise ValueError(f"ambient mismatch: {I.ambient} vs {J.ambient} variables")


# -- operations ----------------------------------------------------------------------

def colon(I: MonomialIdeal, b: MonomialLike) -> MonomialIdeal:
    """``(I : b)``, generated by ``g / gcd(g, b)``."""
    b = I._mono(b)
    return MonomialIdeal(I.ambient, tuple(
        tuple(max(x - y, 0) for x, y in zip(g, b)) for g in I.gens))


def saturate(I: MonomialIdeal, b: MonomialLike) -> MonomialIdeal:
    """``(I : b^inf)``, by iterating the colon until it stabilises."""
    b = I._mono(b)
    cur = I
    while True:
        nxt = colon(cur, b)
        if nxt == cur:
            return cur
        cur = nxt


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ambient, tuple(tuple(min(x, 1) for x in g) for g in I.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return MonomialIdeal(I.ambient, tuple(
        tuple(max(x, y) for x, y in zip(g, h)) for g in I.gens for h in J.gens))


def intersect_all(ideals: Sequence[MonomialIdeal], ambient: int) -> MonomialIdeal:
    out = MonomialIdeal.unit(ambient)
    for J in ideals:
        out = intersect(out, J)
    return out


def hat_plus(I: MonomialIdeal, b: MonomialLike) -> MonomialIdeal:
    """``(I hat+ b)``: intersection of ``(I : a^inf)`` over minimal generators a of ``(I : b^inf)``.

    If ``a' | a`` then ``(I : a'^inf)`` is contained in ``(I : a^inf)``, so the
    minimal generators carry every binding constraint. When ``(I : b^inf)`` is
    the zero ideal the intersection is empty and the unit ideal is returned.
    """
    sat = saturate(I, b)
    return intersect_all([saturate(I, a) for a in sat.gens], I.ambient)


def minimal_primes(I: MonomialIdeal) -> List[MonomialIdeal]:
    """Minimal primes, as ideals generated by variables (minimal vertex covers of the supports)."""
    if I.is_unit():
        return []
    edges = sorted({frozenset(k for k, x in enumerate(g) if x) for g in radical(I).gens},
                   key=lambda s: (len(s), sorted(s)))
    covers: List[FrozenSet[int]] = []

    def search(chosen: FrozenSet[int], k: int) -> None:
        if any(c <= chosen for c in covers):
            return
        while k < len(edges) and edges[k] & chosen:
            k += 1
        if k == len(edges):
            covers[:] = [c for c in covers if not chosen <= c] + [chosen]
            return
        for v in sorted(edges[k]):
            search(chosen | {v}, k + 1)

    search(frozenset(), 0)
    minimal = [c for c in covers if not any(o < c for o in covers)]
    primes = [MonomialIdeal.variables(I.ambient, [v + 1 for v in sorted(c)]) for c in minimal]
    return sorted(primes, key=lambda P: P.gens, reverse=True)


def decomposition_check(I: MonomialIdeal, b: MonomialLike) -> Dict:
    """Check ``I = (I:b) cap (I hat+ b)`` for radical I, else the same after taking radicals."""
    c = colon(I, b)
    h = hat_plus(I, b)
    both = intersect(c, h)
    if I.is_radical():
        identity = "I = (I:b) & (I hat+ b)"
        holds = both == I
    else:
        identity = "rad I = rad((I:b) & (I hat+ b))"
        holds = radical(both) == radical(I)
    return {
        "identity": identity,
        "radical_input": I.is_radical(),
        "holds": holds,
        "ideal": I.to_json(),
        "colon": c.to_json(),
        "hat_plus": h.to_json(),
        "intersection": both.to_json(),
    }
