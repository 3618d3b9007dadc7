"""Monomial term orders on exponent vectors.

An order is used through its sort key: ``key(e)`` maps an exponent tuple to a
flat tuple of ints whose lexicographic comparison realizes the order.  Flat
integer keys can be negated elementwise, which lets callers drive min-heaps
with a maximal-monomial discipline.

Every order here is total, multiplicative (u < v implies uw < vw), and a
well-order (the constant monomial is minimal), which is what division and
Buchberger-style algorithms require.
"""

from __future__ import annotations

from dataclasses import dataclass

Exponents = tuple[int, ...]

LT, EQ, GT = -1, 0, 1


def _grevlex_key(e: Exponents) -> tuple[int, ...]:
    # Higher total degree wins; ties are broken by the rightmost nonzero of
    # the difference being negative, i.e. lex on the negated reversed vector.
    total = 0
    for x in e:
        total += x
    return (total,) + tuple(-x for x in reversed(e))


@dataclass(frozen=True)
class TermOrder:
    """Base class for monomial orders; subclasses supply ``key``."""

    def key(self, e: Exponents) -> tuple[int, ...]:
        raise NotImplementedError

    def compare(self, u: Exponents, v: Exponents) -> int:
        """Return -1, 0 or 1 as u <, =, > v under this order."""
        if len(u) != len(v):
            raise ValueError(f"exponent length mismatch: {len(u)} vs {len(v)}")
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return LT
        if ku > kv:
            return GT
        return EQ


@dataclass(frozen=True)
class Lex(TermOrder):
    """Pure lexicographic order: earlier variables dominate."""

    def key(self, e: Exponents) -> tuple[int, ...]:
        return tuple(e)


@dataclass(frozen=True)
class Grevlex(TermOrder):
    """Graded reverse lexicographic order."""

    def key(self, e: Exponents) -> tuple[int, ...]:
        return _grevlex_key(e)


@dataclass(frozen=True)
class BlockElimination(TermOrder):
    """Eliminate the first ``k`` variables; grevlex within each block.

    Any monomial containing one of the first k variables is larger than every
    monomial in the remaining variables, so basis elements free of the first
    block can be read off a Groebner basis directly.
    """

    k: int

    def key(self, e: Exponents) -> tuple[int, ...]:
        return _grevlex_key(e[: self.k]) + _grevlex_key(e[self.k :])


@dataclass(frozen=True)
class WeightOrder(TermOrder):
    """Compare by a weight vector first, then by a tiebreak order.

    Weights must be nonnegative for the well-order axiom to hold.
    """

    weights: tuple[int, ...]
    tiebreak: TermOrder

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise ValueError("weight vector must be nonnegative")

    def key(self, e: Exponents) -> tuple[int, ...]:
        if len(e) != len(self.weights):
            raise ValueError("exponent length does not match weight vector")
        w = 0
        for wi, ei in zip(self.weights, e):
            w += wi * ei
        return (w,) + self.tiebreak.key(e)


GREVLEX = Grevlex()
LEX = Lex()


def is_elimination_order(order: TermOrder, k: int) -> bool:
    """True if ``order`` eliminates the first ``k`` variables.

    Lex eliminates any prefix; a block order eliminates exactly its block.
    """
    if isinstance(order, Lex):
        return True
    return isinstance(order, BlockElimination) and order.k == k
