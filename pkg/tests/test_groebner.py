"""Groebner bases: worked examples, the independent S-pair check, budgets."""

import random
from fractions import Fraction

import pytest

from detpres.groebner import (
    BudgetExceeded,
    GroebnerBudget,
    Ideal,
    buchberger,
    eliminate,
    ideal_contains,
    ideal_equal,
    normal_form,
    ring_map_kernel,
)
from detpres.orders import BlockElimination, Grevlex, Lex
from detpres.poly import Polynomial, PolynomialRing, exp_div, exp_divides, exp_lcm, exp_mul

Y = PolynomialRing(("y0", "y1", "y2", "y3"))


# -- an independent checker (its own division; never calls buchberger internals) --


def naive_reduce(f, basis, order):
    """Straightforward multivariate division, written independently."""
    remainder = Y_zero = f.ring.zero()
    work = f
    while not work.is_zero():
        lt, lc = work.leading(order)
        hit = None
        for g in basis:
            glt, glc = g.leading(order)
            if exp_divides(glt, lt):
                hit = (g, glt, glc)
                break
        if hit is None:
            mono = f.ring.monomial(lt, lc)
            remainder = remainder + mono
            work = work - mono
        else:
            g, glt, glc = hit
            work = work - f.ring.monomial(exp_div(lt, glt), lc / glc) * g
    return remainder


def check_is_groebner(basis, order):
    """Every S-polynomial of basis pairs reduces to zero."""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            f, g = basis[i], basis[j]
            flt, flc = f.leading(order)
            glt, glc = g.leading(order)
            lcm = exp_lcm(flt, glt)
            s = f.ring.monomial(exp_div(lcm, flt), Fraction(1) / flc) * f - f.ring.monomial(
                exp_div(lcm, glt), Fraction(1) / glc
            ) * g
            if not naive_reduce(s, basis, order).is_zero():
                return False
    return True


# -- worked examples ---------------------------------------------------------------


def test_single_binomial_is_its_own_basis():
    p = Y.parse("y0*y3 - y1*y2")
    gb = buchberger(Ideal(Y, (p,)), Grevlex())
    # The basis is the generator itself, normalized monic on its leading term.
    assert len(gb.basis) == 1
    _, lc = p.leading(Grevlex())
    assert gb.basis[0] == p * (Fraction(1) / lc)


def test_normal_form_of_member_is_zero():
    gb = buchberger(Ideal(Y, (Y.parse("y0*y3 - y1*y2"),)), Grevlex())
    assert normal_form(gb.basis[0], gb).is_zero()


def test_normal_form_leaves_nondivisible_monomial():
    r = PolynomialRing(("y0", "y1", "y2"))
    p = r.parse("y0*y2 - y1^2")
    # Force y0*y2 to lead with a weight order so y1^2 is already reduced.
    order = __import__("detpres.orders", fromlist=["WeightOrder"]).WeightOrder(
        (1, 0, 1), Grevlex()
    )
    gb = buchberger(Ideal(r, (p,)), order)
    lead, _ = gb.basis[0].leading(order)
    assert lead == (1, 0, 1)
    assert normal_form(r.parse("y1^2"), gb) == r.parse("y1^2")


def test_elimination_recovers_conic():
    """Eliminating the parameters of (s^2, s t, t^2) leaves the conic."""
    ring = PolynomialRing(("s", "t", "y0", "y1", "y2"))
    gens = (
        ring.parse("y0 - s^2"),
        ring.parse("y1 - s*t"),
        ring.parse("y2 - t^2"),
    )
    gb = buchberger(Ideal(ring, gens), BlockElimination(2))
    conic = eliminate(gb, 2)
    assert [str(g) for g in conic.generators] == ["y1^2 - y0*y2"]
    # Independent oracle: the relation vanishes under the substitution, and
    # the degree-2 part of the kernel is one-dimensional (6 pair monomials,
    # 5 distinct products of s^2, s t, t^2).
    st = PolynomialRing(("s", "t"))
    images = [st.parse("s^2"), st.parse("s*t"), st.parse("t^2")]
    assert conic.generators[0].substitute(images).is_zero()
    products = {
        tuple(map(sum, zip(images[i].terms[0][0], images[j].terms[0][0])))
        for i in range(3)
        for j in range(i, 3)
    }
    assert 6 - len(products) == 1


def test_eliminate_zero_variables_is_identity():
    gb = buchberger(Ideal(Y, (Y.parse("y0*y3 - y1*y2"),)), Grevlex())
    assert eliminate(gb, 0) is gb.ideal


def test_eliminate_requires_elimination_order():
    gb = buchberger(Ideal(Y, (Y.parse("y0*y3 - y1*y2"),)), Grevlex())
    with pytest.raises(ValueError):
        eliminate(gb, 2)


def test_plucker_relation_is_its_own_basis():
    ring = PolynomialRing(
        ("x_1_2", "x_1_3", "x_1_4", "x_2_3", "x_2_4", "x_3_4")
    )
    q = ring.parse("x_1_2*x_3_4 - x_1_3*x_2_4 + x_2_3*x_1_4")
    gb = buchberger(Ideal(ring, (q,)), Grevlex())
    assert len(gb.basis) == 1
    assert normal_form(q, gb).is_zero()


def test_ideal_contains_itself_and_powers():
    r = PolynomialRing(("y0", "y1"))
    a = Ideal(r, (r.parse("y0"),))
    a2 = Ideal(r, (r.parse("y0^2"),))
    gb_a = buchberger(a, Grevlex())
    gb_a2 = buchberger(a2, Grevlex())
    assert ideal_contains(gb_a, a)
    assert ideal_contains(gb_a, a2)
    assert not ideal_contains(gb_a2, a)


def test_ideal_equal_is_symmetric_and_detects_difference():
    r = PolynomialRing(("y0", "y1"))
    a = Ideal(r, (r.parse("y0"), r.parse("y1")))
    b = Ideal(r, (r.parse("y0 + y1"), r.parse("y0 - y1")))
    assert ideal_equal(a, b)
    assert ideal_equal(b, a)
    assert not ideal_equal(a, Ideal(r, (r.parse("y0"),)))


def test_ring_map_kernel_identity_map_is_zero():
    src = PolynomialRing(("y0", "y1"))
    tgt = PolynomialRing(("a", "b"))
    ker = ring_map_kernel(src, [tgt.parse("a"), tgt.parse("b")])
    assert ker.generators == ()


def test_ring_map_kernel_conic():
    src = PolynomialRing(("y0", "y1", "y2"))
    st = PolynomialRing(("s", "t"))
    ker = ring_map_kernel(src, [st.parse("s^2"), st.parse("s*t"), st.parse("t^2")])
    assert [str(g) for g in ker.generators] == ["y1^2 - y0*y2"]


def test_ring_map_kernel_rejects_inhomogeneous_images():
    src = PolynomialRing(("y0",))
    st = PolynomialRing(("s", "t"))
    with pytest.raises(ValueError):
        ring_map_kernel(src, [st.parse("s + s^2")])


def test_ring_map_kernel_rejects_name_collisions():
    src = PolynomialRing(("s",))
    st = PolynomialRing(("s", "t"))
    with pytest.raises(ValueError):
        ring_map_kernel(src, [st.parse("s")])


# -- structural properties ----------------------------------------------------------


def random_poly(rng, ring, max_terms=3, max_exp=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
        terms[e] = Fraction(rng.randint(-5, 5))
    return Polynomial(ring, terms)


def _random_ideal_bases(seed, count):
    """Random small ideals and their bases; hard instances are skipped."""
    rng = random.Random(seed)
    r = PolynomialRing(("y0", "y1", "y2"))
    budget = GroebnerBudget(max_pairs=3000)
    out = []
    while len(out) < count:
        gens = [random_poly(rng, r) for _ in range(rng.randint(1, 3))]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        try:
            gb = buchberger(Ideal(r, gens), Grevlex(), budget)
        except BudgetExceeded:
            continue
        out.append((gens, gb))
    return out


def test_returned_bases_pass_independent_check():
    for _, gb in _random_ideal_bases(67, 12):
        assert check_is_groebner(list(gb.basis), Grevlex())
        # Reduced: no term of any element is divisible by another leading term.
        for i, g in enumerate(gb.basis):
            for j, h in enumerate(gb.basis):
                if i == j:
                    continue
                hlt, _ = h.leading(Grevlex())
                assert not any(exp_divides(hlt, e) for e, _ in g.terms)


def test_reduced_basis_unique_under_permutation():
    rng = random.Random(71)
    for gens, gb1 in _random_ideal_bases(71, 8):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        gb2 = buchberger(
            Ideal(gb1.ideal.ring, shuffled), Grevlex(), GroebnerBudget(max_pairs=3000)
        )
        assert gb1.basis == gb2.basis


def test_normal_form_is_idempotent_and_linear():
    rng = random.Random(73)
    r = PolynomialRing(("y0", "y1", "y2"))
    gb = buchberger(
        Ideal(r, (r.parse("y0*y2 - y1^2"), r.parse("y0^2 - y1*y2"))), Grevlex()
    )
    for _ in range(25):
        f, g, h = (random_poly(rng, r) for _ in range(3))
        nf = normal_form(f * g + h, gb)
        assert normal_form(nf, gb) == nf
        assert nf == normal_form(normal_form(f * g, gb) + h, gb)


def test_toric_kernels_are_binomial():
    """Kernels of monomial maps have binomial bases with unit coefficients."""
    cases = [
        (("s", "t"), ["s^3", "s^2*t", "s*t^2", "t^3"]),
        (("a", "b", "c"), ["a*b", "b*c", "a*c", "a^2", "b^2", "c^2"]),
    ]
    for names, monos in cases:
        tgt = PolynomialRing(names)
        src = PolynomialRing(tuple(f"y{i}" for i in range(len(monos))))
        ker = ring_map_kernel(src, [tgt.parse(m) for m in monos])
        gb = buchberger(Ideal(src, ker.generators), Grevlex())
        for g in gb.basis:
            assert g.num_terms() == 2
            coeffs = sorted(c for _, c in g.terms)
            assert coeffs == [Fraction(-1), Fraction(1)]


def test_budget_exceeded_reports_progress():
    src = PolynomialRing(("y0", "y1", "y2", "y3"))
    st = PolynomialRing(("s", "t"))
    images = [st.parse(m) for m in ("s^3", "s^2*t", "s*t^2", "t^3")]
    with pytest.raises(BudgetExceeded) as info:
        ring_map_kernel(src, images, budget=GroebnerBudget(max_pairs=1))
    assert info.value.pairs_done >= 1
    assert info.value.basis_size >= 4


def test_zero_ideal_has_empty_basis():
    gb = buchberger(Ideal(Y, ()), Grevlex())
    assert gb.basis == ()
    assert normal_form(Y.parse("y0"), gb) == Y.parse("y0")
