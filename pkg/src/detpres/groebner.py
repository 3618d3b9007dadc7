"""Buchberger's algorithm, normal forms, elimination, and ring-map kernels.

The implementation favors determinism over raw speed: pair selection uses the
normal strategy (minimal lcm under the active order, ties by index), update
prunes pairs with the coprime-leading-term and chain criteria, and the final
basis is fully reduced, monic, and sorted.  Recomputing a basis from permuted
generators yields the identical tuple.

All computations carry an optional resource budget; exceeding it raises
``BudgetExceeded`` with a progress snapshot rather than returning a partial
answer silently.
"""

from __future__ import annotations

import heapq
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .orders import BlockElimination, Grevlex, TermOrder, is_elimination_order
from .poly import (
    Exponents,
    Polynomial,
    PolynomialRing,
    exp_div,
    exp_divides,
    exp_lcm,
    exp_mul,
)

BUDGET_ENV_VAR = "DETPRES_BUDGET_MS"


@dataclass
class GroebnerBudget:
    """Caps on a single Groebner computation.

    ``wall_ms`` defaults to the DETPRES_BUDGET_MS environment variable when
    unset.  ``max_pairs`` bounds the number of S-pairs reduced and
    ``max_basis_terms`` the total number of stored terms across the basis.
    """

    max_pairs: int = 500_000
    max_basis_terms: int = 5_000_000
    wall_ms: float | None = None

    def __post_init__(self) -> None:
        if self.wall_ms is None:
            env = os.environ.get(BUDGET_ENV_VAR)
            if env:
                self.wall_ms = float(env)


class BudgetExceeded(RuntimeError):
    """A Groebner computation ran past its resource budget."""

    def __init__(self, message: str, pairs_done: int, basis_size: int) -> None:
        super().__init__(f"{message} (pairs reduced: {pairs_done}, basis size: {basis_size})")
        self.pairs_done = pairs_done
        self.basis_size = basis_size


@dataclass(frozen=True)
class Ideal:
    """An ideal given by generators; zero generators are dropped."""

    ring: PolynomialRing
    generators: tuple[Polynomial, ...]

    def __init__(self, ring: PolynomialRing, generators: Sequence[Polynomial]) -> None:
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def is_zero(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis of ``ideal`` with respect to ``order``."""

    ideal: Ideal
    order: TermOrder
    basis: tuple[Polynomial, ...]


def _divide_terms(
    work: dict[Exponents, Fraction],
    order: TermOrder,
    reducers: Sequence[tuple[Exponents, Fraction, tuple[tuple[Exponents, Fraction], ...]]],
) -> dict[Exponents, Fraction]:
    """Multivariate division of the ``work`` dict by the reducers.

    Each reducer is (leading exponents, leading coefficient, full term tuple).
    Returns the remainder as a dict.  A lazy max-heap over order keys tracks
    the current largest unprocessed monomial.
    """
    key = order.key
    remainder: dict[Exponents, Fraction] = {}
    heap: list[tuple[tuple[int, ...], Exponents]] = [
        (tuple(-k for k in key(e)), e) for e in work
    ]
    heapq.heapify(heap)
    while heap:
        _, e = heapq.heappop(heap)
        c = work.get(e)
        if not c:
            continue
        hit = None
        for lt, lc, terms in reducers:
            if exp_divides(lt, e):
                hit = (lt, lc, terms)
                break
        if hit is None:
            del work[e]
            remainder[e] = c
            continue
        lt, lc, terms = hit
        shift = exp_div(e, lt)
        factor = c / lc
        for me, mc in terms:
            te = exp_mul(me, shift)
            prev = work.get(te)
            if prev is None:
                nxt = -factor * mc
                work[te] = nxt
                heapq.heappush(heap, (tuple(-k for k in key(te)), te))
            else:
                nxt = prev - factor * mc
                if nxt == 0:
                    del work[te]
                else:
                    work[te] = nxt
    return remainder


def _reduce_poly(
    f: Polynomial,
    order: TermOrder,
    reducers: Sequence[tuple[Exponents, Fraction, tuple[tuple[Exponents, Fraction], ...]]],
) -> Polynomial:
    if f.is_zero() or not reducers:
        return f
    rem = _divide_terms(dict(f.terms), order, reducers)
    return Polynomial(f.ring, rem)


def _reducer(p: Polynomial, order: TermOrder):
    lt, lc = p.leading(order)
    return (lt, lc, p.terms)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by the reduced basis of ``gb``.

    No term of the result is divisible by a basis leading term; the result is
    zero exactly when ``f`` lies in the ideal.
    """
    if f.ring != gb.ideal.ring:
        raise ValueError("polynomial lives in a different ring than the basis")
    reducers = [_reducer(g, gb.order) for g in gb.basis]
    return _reduce_poly(f, gb.order, reducers)


def _spoly(
    f: Polynomial,
    g: Polynomial,
    order: TermOrder,
    lt_f: Exponents,
    lc_f: Fraction,
    lt_g: Exponents,
    lc_g: Fraction,
) -> Polynomial:
    lcm_e = exp_lcm(lt_f, lt_g)
    mf = f.ring.monomial(exp_div(lcm_e, lt_f), Fraction(1) / lc_f)
    mg = g.ring.monomial(exp_div(lcm_e, lt_g), Fraction(1) / lc_g)
    return mf * f - mg * g


def buchberger(
    ideal: Ideal,
    order: TermOrder,
    budget: GroebnerBudget | None = None,
) -> GroebnerBasis:
    """Compute the reduced Groebner basis of ``ideal`` under ``order``.

    Deterministic: for a fixed generator set (up to permutation) and order,
    the returned basis tuple is identical across runs.
    """
    if budget is None:
        budget = GroebnerBudget()
    start = time.perf_counter()
    ring = ideal.ring
    key = order.key

    basis: list[Polynomial] = []
    lts: list[Exponents] = []
    lcs: list[Fraction] = []
    pairs: set[tuple[int, int]] = set()

    def add_generator(p: Polynomial) -> None:
        # Gebauer-Moeller style pair update for the new element t = len(basis).
        lt_new, lc_new = p.leading(order)
        t = len(basis)
        # Drop old pairs whose lcm is a proper multiple of the new leading term.
        survivors = set()
        for (i, j) in pairs:
            lcm_ij = exp_lcm(lts[i], lts[j])
            if (
                not exp_divides(lt_new, lcm_ij)
                or exp_lcm(lts[i], lt_new) == lcm_ij
                or exp_lcm(lts[j], lt_new) == lcm_ij
            ):
                survivors.add((i, j))
        pairs.clear()
        pairs.update(survivors)
        # Group candidate new pairs by lcm; keep one representative of each
        # minimal lcm; drop coprime-leading-term pairs outright.
        by_lcm: dict[Exponents, list[int]] = {}
        for i in range(t):
            by_lcm.setdefault(exp_lcm(lts[i], lt_new), []).append(i)
        minimal: list[Exponents] = []
        for lcm_e in sorted(by_lcm, key=key):
            if not any(exp_divides(prev, lcm_e) for prev in minimal):
                minimal.append(lcm_e)
        for lcm_e in minimal:
            members = by_lcm[lcm_e]
            if any(exp_mul(lts[i], lt_new) == lcm_e for i in members):
                continue  # product criterion: coprime leading terms
            pairs.add((min(members), t))
        basis.append(p)
        lts.append(lt_new)
        lcs.append(lc_new)

    for g in sorted(ideal.generators, key=lambda p: key(p.leading(order)[0])):
        lt, lc = g.leading(order)
        add_generator(g * (Fraction(1) / lc))

    pairs_done = 0
    while pairs:
        pairs_done += 1
        if pairs_done > budget.max_pairs:
            raise BudgetExceeded("S-pair budget exceeded", pairs_done, len(basis))
        if budget.wall_ms is not None and (time.perf_counter() - start) * 1000 > budget.wall_ms:
            raise BudgetExceeded("wall-clock budget exceeded", pairs_done, len(basis))
        i, j = min(pairs, key=lambda p: (key(exp_lcm(lts[p[0]], lts[p[1]])), p))
        pairs.discard((i, j))
        s = _spoly(basis[i], basis[j], order, lts[i], lcs[i], lts[j], lcs[j])
        if s.is_zero():
            continue
        reducers = [(lts[k], lcs[k], basis[k].terms) for k in range(len(basis))]
        r = _reduce_poly(s, order, reducers)
        if r.is_zero():
            continue
        lt, lc = r.leading(order)
        add_generator(r * (Fraction(1) / lc))
        total_terms = sum(len(b.terms) for b in basis)
        if total_terms > budget.max_basis_terms:
            raise BudgetExceeded("term budget exceeded", pairs_done, len(basis))

    reduced = _interreduce(basis, order)
    return GroebnerBasis(ideal=ideal, order=order, basis=tuple(reduced))


def _interreduce(basis: list[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Minimalize and tail-reduce a basis; output monic, sorted ascending."""
    key = order.key
    # Minimal: drop elements whose leading term is divisible by another's.
    sorted_basis = sorted(
        (b for b in basis if not b.is_zero()),
        key=lambda p: key(p.leading(order)[0]),
    )
    minimal: list[Polynomial] = []
    minimal_lts: list[Exponents] = []
    for p in sorted_basis:
        lt, _ = p.leading(order)
        if not any(exp_divides(m, lt) for m in minimal_lts):
            minimal.append(p)
            minimal_lts.append(lt)
    # Tail-reduce each element against all the others until stable.
    current = minimal
    while True:
        nxt: list[Polynomial] = []
        changed = False
        for idx, p in enumerate(current):
            others = [
                _reducer(q, order) for k, q in enumerate(current) if k != idx
            ]
            r = _reduce_poly(p, order, others)
            if r != p:
                changed = True
            if not r.is_zero():
                nxt.append(r)
        current = nxt
        if not changed:
            break
    out = []
    for p in current:
        _, lc = p.leading(order)
        out.append(p * (Fraction(1) / lc))
    out.sort(key=lambda p: key(p.leading(order)[0]))
    return out


def ideal_contains(gb_a: GroebnerBasis, b: Ideal) -> bool:
    """True iff every generator of ``b`` reduces to zero against ``gb_a``."""
    if gb_a.ideal.ring != b.ring:
        raise ValueError("ideals live in different rings")
    return all(normal_form(g, gb_a).is_zero() for g in b.generators)


def ideal_equal(
    a: Ideal,
    b: Ideal,
    order: TermOrder | None = None,
    budget: GroebnerBudget | None = None,
) -> bool:
    """Decide equality of ideals by mutual containment of Groebner bases."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    if order is None:
        order = Grevlex()
    gb_a = buchberger(a, order, budget)
    if not ideal_contains(gb_a, b):
        return False
    gb_b = buchberger(b, order, budget)
    return ideal_contains(gb_b, a)


def eliminate(gb: GroebnerBasis, k: int) -> Ideal:
    """The elimination ideal: basis elements free of the first k variables.

    ``gb`` must have been computed with an order that eliminates the first
    ``k`` variables.  The result lives in the ring on the remaining variables
    (grading columns restricted accordingly).
    """
    if k < 0 or k > gb.ideal.ring.nvars:
        raise ValueError("elimination count out of range")
    if k == 0:
        return gb.ideal
    if not is_elimination_order(gb.order, k):
        raise ValueError("basis was not computed with an elimination order for k")
    ring = gb.ideal.ring
    sub_grading = tuple(row[k:] for row in ring.grading)
    if all(all(x == 0 for x in row) for row in sub_grading):
        sub_grading = ()
    subring = PolynomialRing(ring.variables[k:], sub_grading)
    kept: list[Polynomial] = []
    for g in gb.basis:
        if all(all(x == 0 for x in e[:k]) for e, _ in g.terms):
            kept.append(
                Polynomial(subring, tuple((e[k:], c) for e, c in g.terms))
            )
    return Ideal(subring, kept)


def ring_map_kernel(
    source: PolynomialRing,
    images: Sequence[Polynomial],
    target_relations: Ideal | None = None,
    budget: GroebnerBudget | None = None,
) -> Ideal:
    """Kernel of the map source -> target/relations sending var j to images[j].

    Computed by adjoining the target variables in front of the source
    variables, forming the ideal generated by the relations together with
    (var_j - image_j), and eliminating the target block.  Images must be
    homogeneous in the target grading so the kernel is homogeneous.
    """
    if len(images) != source.nvars:
        raise ValueError("need one image per source variable")
    if not images:
        raise ValueError("source ring has no variables")
    target = images[0].ring
    for img in images:
        if img.ring != target:
            raise ValueError("images live in different rings")
        if not img.is_homogeneous():
            raise ValueError("images must be homogeneous in the target grading")
    if target_relations is not None and not target_relations.is_zero():
        if target_relations.ring != target:
            raise ValueError("relations live in a different ring than the images")
        relations = target_relations.generators
    else:
        relations = ()
    if set(source.variables) & set(target.variables):
        raise ValueError("source and target variable names must be disjoint")

    k = target.nvars
    combined = PolynomialRing(target.variables + source.variables)

    def lift_target(p: Polynomial) -> Polynomial:
        zero_tail = (0,) * source.nvars
        return Polynomial(combined, tuple((e + zero_tail, c) for e, c in p.terms))

    gens: list[Polynomial] = [lift_target(r) for r in relations]
    zero_head = (0,) * k
    for j, img in enumerate(images):
        e = [0] * combined.nvars
        e[k + j] = 1
        yj = Polynomial(combined, ((tuple(e), Fraction(1)),))
        gens.append(yj - lift_target(img))

    gb = buchberger(Ideal(combined, gens), BlockElimination(k), budget)
    eliminated = eliminate(gb, k)
    # Re-express in the caller's source ring (same variables, its grading).
    out = [
        Polynomial(source, tuple((e, c) for e, c in g.terms))
        for g in eliminated.generators
    ]
    return Ideal(source, out)
