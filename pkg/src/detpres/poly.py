"""Multigraded polynomial rings and exact sparse polynomials.

Coefficients are ``fractions.Fraction`` (exact, arbitrary precision).  A
polynomial stores its nonzero terms as a tuple of (exponent tuple, coefficient)
pairs sorted grevlex-descending.  That fixed internal order makes canonical
forms unique, so equality and hashing are cheap; term orders other than
grevlex are applied at comparison time, never to the stored form.

The text format round-trips exactly: terms joined by ``+``/``-``, a term is
``[coeff][*]var^e[*var^e...]`` with an integer or ``p/q`` coefficient, and
``^1`` may be omitted.  Example: ``y0*y2 - y1^2`` or ``3/2*x_1_0^2*x_2_1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .orders import GREVLEX, Exponents

_GREVLEX_KEY = GREVLEX.key

Coefficient = Fraction
Term = tuple[Exponents, Fraction]


def exp_mul(u: Exponents, v: Exponents) -> Exponents:
    """Exponent vector of the product monomial."""
    return tuple(a + b for a, b in zip(u, v))


def exp_divides(d: Exponents, m: Exponents) -> bool:
    """True if the monomial with exponents ``d`` divides the one with ``m``."""
    for a, b in zip(d, m):
        if a > b:
            return False
    return True


def exp_div(m: Exponents, d: Exponents) -> Exponents:
    """Exponents of m/d; caller must ensure divisibility."""
    return tuple(a - b for a, b in zip(m, d))


def exp_lcm(u: Exponents, v: Exponents) -> Exponents:
    return tuple(a if a > b else b for a, b in zip(u, v))


def total_degree(e: Exponents) -> int:
    return sum(e)


@dataclass(frozen=True)
class PolynomialRing:
    """A polynomial ring with named variables and a ZZ^l multigrading.

    ``grading`` has one row per grading component and one column per variable;
    the multidegree of a monomial is the matrix-vector product of the grading
    with the exponent vector.  The default is the standard total-degree
    grading (a single row of ones).
    """

    variables: tuple[str, ...]
    grading: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        if not self.grading:
            object.__setattr__(self, "grading", ((1,) * len(self.variables),))
        else:
            object.__setattr__(
                self, "grading", tuple(tuple(row) for row in self.grading)
            )
        for row in self.grading:
            if len(row) != len(self.variables):
                raise ValueError("grading rows must have one entry per variable")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def num_gradings(self) -> int:
        return len(self.grading)

    def multidegree(self, exponents: Exponents) -> tuple[int, ...]:
        """Multidegree of a monomial: grading matrix times exponent vector."""
        return tuple(
            sum(g * e for g, e in zip(row, exponents)) for row in self.grading
        )

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int | Fraction) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, ((tuple(e), Fraction(1)),))

    def monomial(self, exponents: Sequence[int], coeff: int | Fraction = 1) -> "Polynomial":
        if len(exponents) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = Fraction(coeff)
        if c == 0:
            return self.zero()
        return Polynomial(self, ((tuple(exponents), c),))

    def from_terms(self, terms: Mapping[Exponents, Fraction] | Iterable[Term]) -> "Polynomial":
        return Polynomial(self, terms)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def __repr__(self) -> str:
        return f"PolynomialRing({', '.join(self.variables)})"


class Polynomial:
    """An immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(
        self,
        ring: PolynomialRing,
        terms: Mapping[Exponents, Fraction] | Iterable[Term],
    ) -> None:
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        merged: dict[Exponents, Fraction] = {}
        for exps, coeff in items:
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise ValueError("exponent vector has wrong length for ring")
            prev = merged.get(exps)
            if prev is None:
                merged[exps] = Fraction(coeff)
            else:
                s = prev + coeff
                if s == 0:
                    del merged[exps]
                else:
                    merged[exps] = s
        ordered = tuple(
            (e, merged[e])
            for e in sorted(merged, key=_GREVLEX_KEY, reverse=True)
        )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", ordered)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Polynomial is immutable")

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def is_monomial(self) -> bool:
        """True for a single term with coefficient one."""
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        target = tuple(exponents)
        for e, c in self.terms:
            if e == target:
                return c
        return Fraction(0)

    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(total_degree(e) for e, _ in self.terms)

    def multidegree(self) -> tuple[int, ...] | None:
        """The common multidegree of all terms, or None if inhomogeneous.

        The zero polynomial is homogeneous of every degree and returns None.
        """
        if not self.terms:
            return None
        degrees = {self.ring.multidegree(e) for e, _ in self.terms}
        if len(degrees) == 1:
            return next(iter(degrees))
        return None

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        return self.multidegree() is not None

    def leading(self, order) -> Term:
        """Leading (exponents, coefficient) under ``order``; error on zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        key = order.key
        return max(self.terms, key=lambda t: key(t[0]))

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            prev = acc.get(e)
            if prev is None:
                acc[e] = c
            else:
                s = prev + c
                if s == 0:
                    del acc[e]
                else:
                    acc[e] = s
        return Polynomial(self.ring, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.__add__(-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, tuple((e, k * c) for e, k in self.terms))
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        acc: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = exp_mul(ea, eb)
                prev = acc.get(e)
                if prev is None:
                    acc[e] = ca * cb
                else:
                    s = prev + ca * cb
                    if s == 0:
                        del acc[e]
                    else:
                        acc[e] = s
        return Polynomial(self.ring, acc)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at ``images``: variable i is replaced by images[i].

        All images must live in one ring, which becomes the result's ring.
        """
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        if not images:
            raise ValueError("substitution into a ring with no variables")
        target = images[0].ring
        for img in images:
            if img.ring != target:
                raise ValueError("images live in different rings")
        result = target.zero()
        for e, c in self.terms:
            term = target.constant(c)
            for img, k in zip(images, e):
                if k:
                    term = term * img**k
            result = result + term
        return result

    # -- comparison / output -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ring.variables, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)})"


# -- text format -------------------------------------------------------------

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_,]*")
_COEFF_RE = re.compile(r"\d+(?:/\d+)?")


class PolynomialSyntaxError(ValueError):
    pass


def _format_monomial(ring: PolynomialRing, exps: Exponents) -> str:
    parts = []
    for name, e in zip(ring.variables, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form; parsing it back yields an equal polynomial."""
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for i, (exps, coeff) in enumerate(p.terms):
        mono = _format_monomial(p.ring, exps)
        mag = -coeff if coeff < 0 else coeff
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(chunks)


def parse_polynomial(ring: PolynomialRing, text: str) -> Polynomial:
    """Parse the polynomial text format into ``ring``.

    Raises PolynomialSyntaxError on malformed input and on variable names
    not present in the ring.
    """
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise PolynomialSyntaxError("empty polynomial text")
    index = {name: i for i, name in enumerate(ring.variables)}
    terms: dict[Exponents, Fraction] = {}
    pos = 0
    n = len(s)
    first = True
    while pos < n:
        sign = Fraction(1)
        if s[pos] in "+-":
            if s[pos] == "-":
                sign = Fraction(-1)
            pos += 1
        elif not first:
            raise PolynomialSyntaxError(f"expected '+' or '-' at position {pos}")
        first = False
        if pos >= n:
            raise PolynomialSyntaxError("dangling sign at end of input")

        coeff = sign
        saw_anything = False
        m = _COEFF_RE.match(s, pos)
        if m:
            coeff *= Fraction(m.group(0))
            pos = m.end()
            saw_anything = True
            if pos < n and s[pos] == "*":
                pos += 1
                if pos >= n or not _VAR_RE.match(s, pos):
                    raise PolynomialSyntaxError("expected a variable after '*'")

        exps = [0] * ring.nvars
        while True:
            m = _VAR_RE.match(s, pos)
            if not m:
                break
            name = m.group(0)
            if name not in index:
                raise PolynomialSyntaxError(f"unknown variable {name!r}")
            pos = m.end()
            e = 1
            if pos < n and s[pos] == "^":
                pos += 1
                m2 = re.match(r"\d+", s[pos:])
                if not m2:
                    raise PolynomialSyntaxError("expected an integer exponent after '^'")
                e = int(m2.group(0))
                pos += m2.end()
            exps[index[name]] += e
            saw_anything = True
            if pos < n and s[pos] == "*":
                pos += 1
                if pos >= n or not _VAR_RE.match(s, pos):
                    raise PolynomialSyntaxError("expected a variable after '*'")
                continue
            break

        if not saw_anything:
            raise PolynomialSyntaxError(f"could not read a term at position {pos}")
        if s[pos : pos + 1] == "0" or (s[pos : pos + 1].isdigit()):
            raise PolynomialSyntaxError(f"unexpected digit at position {pos}")
        key = tuple(exps)
        prev = terms.get(key, Fraction(0))
        tot = prev + coeff
        if tot == 0:
            terms.pop(key, None)
        else:
            terms[key] = tot
    return Polynomial(ring, terms)
