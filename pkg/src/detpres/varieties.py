"""Embedded varieties and their section bases.

Three constructions are supported: Segre-Veronese products of projective
spaces, toric varieties from dilated lattice polytopes, and presented graded
coordinate rings (a polynomial ring modulo homogeneous relations).  Each
yields an ``EmbeddedVariety``: a coordinate presentation, a line-bundle
multidegree, an ordered section basis, and the ambient ring whose variables
are in bijection with the sections.

Section bases are ordered grevlex-descending by default; "lex" ordering and
explicit monomial lists are available so printed matrices can be reproduced
verbatim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence

from .groebner import GroebnerBasis, Ideal, buchberger, normal_form
from .linalg import RationalMatrix
from .orders import GREVLEX, LEX, Grevlex
from .poly import Exponents, Polynomial, PolynomialRing, exp_divides, parse_polynomial

SECTION_ORDERS = ("grevlex", "lex")


def _order_key(kind: str):
    if kind == "lex":
        return LEX.key
    if kind == "grevlex":
        return GREVLEX.key
    raise ValueError(f"unknown section order {kind!r}")


# -- lattice polytopes ---------------------------------------------------------


class LatticePolytope:
    """A full-dimensional lattice polytope given by (at least) its vertices.

    Facets are recovered by brute force over point subsets, which is adequate
    at the low dimensions and small point counts supported here.
    """

    __slots__ = ("points", "dim", "_facets")

    def __init__(self, points: Sequence[Sequence[int]]) -> None:
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise ValueError("points have inconsistent dimensions")
        self.points: tuple[tuple[int, ...], ...] = tuple(pts)
        self.dim = len(pts[0])
        self._facets: tuple[tuple[tuple[int, ...], int], ...] | None = None

    def affine_dim(self) -> int:
        base = self.points[0]
        diffs = [
            [q[i] - base[i] for i in range(self.dim)] for q in self.points[1:]
        ]
        if not diffs:
            return 0
        return RationalMatrix(diffs).rank()

    def facets(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Inequalities a . x <= b cutting out the polytope.

        Requires the polytope to be full-dimensional in its ambient lattice.
        """
        if self._facets is not None:
            return self._facets
        n = self.dim
        if self.affine_dim() != n:
            raise ValueError(
                "polytope is not full-dimensional; supply coordinates in its affine span"
            )
        found: set[tuple[tuple[int, ...], int]] = set()
        for combo in itertools.combinations(self.points, n):
            base = combo[0]
            diffs = [
                [q[i] - base[i] for i in range(n)] for q in combo[1:]
            ]
            if n == 1:
                normal = (Fraction(1),)
            else:
                kernel = RationalMatrix(diffs).kernel_basis()
                if len(kernel) != 1:
                    continue
                normal = kernel[0]
            mult = 1
            for x in normal:
                mult = lcm(mult, Fraction(x).denominator)
            ints = [int(Fraction(x) * mult) for x in normal]
            g = 0
            for x in ints:
                g = gcd(g, x)
            if g > 1:
                ints = [x // g for x in ints]
            b = sum(a * c for a, c in zip(ints, base))
            values = [sum(a * c for a, c in zip(ints, q)) for q in self.points]
            hi, lo = max(values), min(values)
            if hi == b and lo < b:
                found.add((tuple(ints), b))
            elif lo == b and hi > b:
                found.add((tuple(-a for a in ints), -b))
        self._facets = tuple(sorted(found))
        return self._facets

    def contains(self, point: Sequence[int], dilation: int = 1) -> bool:
        """Membership of an integer point in ``dilation * P`` (exact)."""
        return all(
            sum(a * x for a, x in zip(normal, point)) <= dilation * b
            for normal, b in self.facets()
        )

    def lattice_points(self, dilation: int = 1) -> list[tuple[int, ...]]:
        """All lattice points of the dilated polytope, sorted ascending."""
        if dilation < 0:
            raise ValueError("dilation must be nonnegative")
        if dilation == 0:
            return [(0,) * self.dim]
        facets = self.facets()
        los = [dilation * min(p[i] for p in self.points) for i in range(self.dim)]
        his = [dilation * max(p[i] for p in self.points) for i in range(self.dim)]
        out = []
        for q in itertools.product(
            *(range(lo, hi + 1) for lo, hi in zip(los, his))
        ):
            if all(
                sum(a * x for a, x in zip(normal, q)) <= dilation * b
                for normal, b in facets
            ):
                out.append(q)
        return out


# -- presentations and section bases -------------------------------------------


@dataclass(frozen=True)
class CoordinatePresentation:
    """A multigraded coordinate ring: polynomial ring modulo relations."""

    cox_ring: PolynomialRing
    relations: Ideal
    pic_rank: int

    def __post_init__(self) -> None:
        for g in self.relations.generators:
            if not g.is_homogeneous():
                raise ValueError("relations must be homogeneous in the grading")


@dataclass(frozen=True)
class SectionBasis:
    """An ordered monomial basis of the sections of one multidegree."""

    degree: tuple[int, ...]
    sections: tuple[Polynomial, ...]

    @property
    def exponents(self) -> tuple[Exponents, ...]:
        return tuple(p.terms[0][0] for p in self.sections)

    def __len__(self) -> int:
        return len(self.sections)


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def monomials_of_multidegree(
    ring: PolynomialRing, degree: Sequence[int]
) -> list[Exponents]:
    """Exponent vectors of all ring monomials with the given multidegree.

    Requires nonnegative grading entries and every variable to carry a
    nonzero degree vector, so the answer is finite.
    """
    degree = tuple(degree)
    if len(degree) != ring.num_gradings:
        raise ValueError("degree length does not match grading rank")
    cols = [
        tuple(row[j] for row in ring.grading) for j in range(ring.nvars)
    ]
    for col in cols:
        if any(x < 0 for x in col):
            raise ValueError("grading entries must be nonnegative for enumeration")
        if all(x == 0 for x in col):
            raise ValueError("a degree-zero variable makes the enumeration infinite")
    out: list[Exponents] = []
    exps = [0] * ring.nvars

    def rec(j: int, remaining: tuple[int, ...]) -> None:
        if j == ring.nvars:
            if all(x == 0 for x in remaining):
                out.append(tuple(exps))
            return
        col = cols[j]
        cap = None
        for c, r in zip(col, remaining):
            if c > 0:
                bound = r // c
                cap = bound if cap is None else min(cap, bound)
        assert cap is not None
        for e in range(cap, -1, -1):
            nxt = tuple(r - e * c for r, c in zip(remaining, col))
            if any(x < 0 for x in nxt):
                continue
            exps[j] = e
            rec(j + 1, nxt)
        exps[j] = 0

    rec(0, degree)
    return out


class EmbeddedVariety:
    """A variety embedded by the complete linear series of a line bundle.

    Holds the coordinate presentation, the bundle multidegree, the ordered
    section basis ``gamma``, and the ambient ring with one variable per
    section.  Construction is pure; instances are treated as immutable.
    """

    def __init__(
        self,
        kind: str,
        presentation: CoordinatePresentation,
        bundle_degree: tuple[int, ...],
        gamma: SectionBasis,
        section_order: str = "grevlex",
        dims: tuple[int, ...] | None = None,
        multidegree: tuple[int, ...] | None = None,
        polytope: LatticePolytope | None = None,
        dilation: int | None = None,
        gamma_overridden: bool = False,
    ) -> None:
        self.kind = kind
        self.presentation = presentation
        self.bundle_degree = bundle_degree
        self.gamma = gamma
        self.section_order = section_order
        self.dims = dims
        self.multidegree = multidegree
        self.polytope = polytope
        self.dilation = dilation
        self.gamma_overridden = gamma_overridden
        r = len(gamma.sections)
        self.ambient_ring = PolynomialRing(tuple(f"y{i}" for i in range(r)))
        self._relations_gb: GroebnerBasis | None = None
        self._gamma_index: dict[Exponents, int] | None = None
        self._expander: "_Expander | None" = None
        self._std_cache: dict[tuple[int, ...], list[Exponents]] = {}

    # -- basic accessors ---------------------------------------------------

    @property
    def cox_ring(self) -> PolynomialRing:
        return self.presentation.cox_ring

    @property
    def relations(self) -> Ideal:
        return self.presentation.relations

    @property
    def num_sections(self) -> int:
        return len(self.gamma.sections)

    def is_monomial_embedding(self) -> bool:
        """True when relations are trivial and all sections are monomials."""
        return self.relations.is_zero() and all(
            s.is_monomial() for s in self.gamma.sections
        )

    def relations_gb(self) -> GroebnerBasis | None:
        if self.relations.is_zero():
            return None
        if self._relations_gb is None:
            self._relations_gb = buchberger(self.relations, Grevlex())
        return self._relations_gb

    def gamma_index(self) -> dict[Exponents, int]:
        if self._gamma_index is None:
            self._gamma_index = {
                p.terms[0][0]: i for i, p in enumerate(self.gamma.sections)
            }
        return self._gamma_index

    # -- section bases -----------------------------------------------------

    def _standard_monomials(self, degree: tuple[int, ...]) -> list[Exponents]:
        """Monomials of the multidegree not divisible by a relations leading term."""
        if degree in self._std_cache:
            return self._std_cache[degree]
        monos = monomials_of_multidegree(self.cox_ring, degree)
        gb = self.relations_gb()
        if gb is not None:
            lts = [g.leading(gb.order)[0] for g in gb.basis]
            monos = [
                m for m in monos if not any(exp_divides(lt, m) for lt in lts)
            ]
        self._std_cache[degree] = monos
        return monos

    def section_exponents(self, degree: Sequence[int]) -> list[Exponents]:
        """Ordered exponent vectors of the section basis for ``degree``."""
        degree = tuple(degree)
        if degree == self.bundle_degree and self.gamma.sections:
            return list(self.gamma.exponents)
        key = _order_key(self.section_order)
        if self.kind == "toric":
            (d,) = degree
            if d < 0:
                raise ValueError("unsupported degree for a dilation variety")
            pts = self.polytope.lattice_points(d)  # type: ignore[union-attr]
            mins = [
                min(p[i] for p in self.polytope.points)  # type: ignore[union-attr]
                for i in range(self.polytope.dim)  # type: ignore[union-attr]
            ]
            exps = [
                (d,) + tuple(q[i] - d * mins[i] for i in range(len(q))) for q in pts
            ]
        elif self.kind == "segre_veronese":
            if any(d < 0 for d in degree):
                raise ValueError("unsupported degree for a product of projective spaces")
            blocks = [
                list(_compositions(d, n + 1))
                for d, n in zip(degree, self.dims)  # type: ignore[arg-type]
            ]
            exps = [
                tuple(itertools.chain.from_iterable(combo))
                for combo in itertools.product(*blocks)
            ]
        else:
            exps = self._standard_monomials(degree)
        return sorted(exps, key=key, reverse=True)

    def section_basis(self, degree: Sequence[int]) -> SectionBasis:
        degree = tuple(degree)
        if degree == self.bundle_degree and self.gamma.sections:
            return self.gamma
        ring = self.cox_ring
        sections = tuple(ring.monomial(e) for e in self.section_exponents(degree))
        return SectionBasis(degree=degree, sections=sections)

    def gamma_dim(self, degree: Sequence[int]) -> int:
        """Dimension of the space of sections of the given multidegree."""
        degree = tuple(degree)
        if self.kind == "segre_veronese":
            if any(d < 0 for d in degree):
                raise ValueError("unsupported degree for a product of projective spaces")
            return _product_gamma_dim(self.dims, degree)  # type: ignore[arg-type]
        if self.kind == "toric":
            (d,) = degree
            if d < 0:
                raise ValueError("unsupported degree for a dilation variety")
            return len(self.polytope.lattice_points(d))  # type: ignore[union-attr]
        return len(self._standard_monomials(degree))

    # -- expansion into ambient coordinates ---------------------------------

    def expand_to_ambient(self, p: Polynomial) -> Polynomial:
        """Express a cox-ring class of bundle degree as a linear form in y.

        Reduces ``p`` modulo the relations, then writes the normal form as an
        exact rational combination of the gamma sections.  Raises
        ExpansionError when the class falls outside the span, which signals an
        internal inconsistency rather than a mathematical outcome.
        """
        gb = self.relations_gb()
        nf = normal_form(p, gb) if gb is not None else p
        if self._expander is None:
            self._expander = _Expander(self)
        coeffs = self._expander.expand(nf)
        ring = self.ambient_ring
        return Polynomial(
            ring,
            {
                tuple(1 if k == i else 0 for k in range(ring.nvars)): c
                for i, c in coeffs
            },
        )

    def descriptor(self) -> dict:
        """A JSON-ready summary of the variety."""
        out: dict = {
            "kind": self.kind,
            "bundle_degree": list(self.bundle_degree),
            "num_sections": self.num_sections,
            "ambient_dim": self.num_sections - 1,
        }
        if self.kind == "segre_veronese":
            out["dims"] = list(self.dims)  # type: ignore[arg-type]
            out["multidegree"] = list(self.multidegree)  # type: ignore[arg-type]
        elif self.kind == "toric":
            out["points"] = [list(p) for p in self.polytope.points]  # type: ignore[union-attr]
            out["dilation"] = self.dilation
        else:
            out["variables"] = list(self.cox_ring.variables)
            out["relations"] = [str(g) for g in self.relations.generators]
        return out


class ExpansionError(RuntimeError):
    """A section product failed to expand in the gamma basis."""


class _Expander:
    """Writes normal forms as combinations of the gamma sections.

    For monomial bases this is an index lookup.  Otherwise the gamma normal
    forms are inverted once over the standard-monomial basis and every
    expansion becomes a vector-matrix product.
    """

    def __init__(self, variety: EmbeddedVariety) -> None:
        self.variety = variety
        self.trivial = variety.is_monomial_embedding() and not variety.gamma_overridden
        self.index = variety.gamma_index()
        self.std_index: dict[Exponents, int] | None = None
        self.inverse_rows: list[tuple[Fraction, ...]] | None = None
        if not self.trivial:
            std = variety._standard_monomials(variety.bundle_degree)
            self.std_index = {m: i for i, m in enumerate(std)}
            gb = variety.relations_gb()
            rows = []
            for s in variety.gamma.sections:
                nf = normal_form(s, gb) if gb is not None else s
                row = [Fraction(0)] * len(std)
                for e, c in nf.terms:
                    if e not in self.std_index:
                        raise ExpansionError(
                            "gamma section reduces outside the standard monomials"
                        )
                    row[self.std_index[e]] = c
                rows.append(row)
            matrix = RationalMatrix(rows)
            if matrix.rank() != len(variety.gamma.sections):
                raise ValueError(
                    "section basis is not linearly independent modulo the relations"
                )
            self.inverse_rows = _invert_square(rows)

    def expand(self, nf: Polynomial) -> list[tuple[int, Fraction]]:
        """Coefficients (section index, coefficient) of the normal form."""
        if nf.is_zero():
            return []
        if self.trivial:
            out = []
            for e, c in nf.terms:
                i = self.index.get(e)
                if i is None:
                    raise ExpansionError(
                        f"product monomial {e} is not a section of the bundle"
                    )
                out.append((i, c))
            return out
        assert self.std_index is not None and self.inverse_rows is not None
        v = [Fraction(0)] * len(self.std_index)
        for e, c in nf.terms:
            i = self.std_index.get(e)
            if i is None:
                raise ExpansionError(
                    f"normal form monomial {e} is outside the degree piece"
                )
            v[i] = c
        coeffs = []
        for j in range(len(self.inverse_rows[0])):
            s = Fraction(0)
            for i, x in enumerate(v):
                if x:
                    s += x * self.inverse_rows[i][j]
            if s:
                coeffs.append((j, s))
        return coeffs


def _invert_square(rows: list[list[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Gauss-Jordan inverse of a small square matrix of Fractions."""
    n = len(rows)
    aug = [
        [Fraction(x) for x in row]
        + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = Fraction(1) / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[c])]
    return [tuple(row[n:]) for row in aug]


def _product_gamma_dim(dims: tuple[int, ...], degree: tuple[int, ...]) -> int:
    out = 1
    for n, d in zip(dims, degree):
        out *= comb(n + d, d)
    return out


# -- constructors ---------------------------------------------------------------


def segre_veronese(
    dims: Sequence[int],
    multidegree: Sequence[int],
    section_order: str = "grevlex",
) -> EmbeddedVariety:
    """A product of projective spaces embedded by a very ample bundle.

    ``dims`` lists the factor dimensions and ``multidegree`` the bundle class;
    every entry of the multidegree must be positive.
    """
    dims = tuple(int(n) for n in dims)
    multidegree = tuple(int(m) for m in multidegree)
    if len(dims) != len(multidegree) or not dims:
        raise ValueError("dims and multidegree must be nonempty and equal length")
    if any(n < 1 for n in dims):
        raise ValueError("factor dimensions must be at least 1")
    if any(m < 1 for m in multidegree):
        raise ValueError("the bundle is not ample: every multidegree entry must be >= 1")
    names = []
    grading_rows: list[list[int]] = []
    for i, n in enumerate(dims, start=1):
        for j in range(n + 1):
            names.append(f"x_{i}_{j}")
    pos = 0
    for i, n in enumerate(dims):
        row = [0] * sum(d + 1 for d in dims)
        for j in range(n + 1):
            row[pos + j] = 1
        grading_rows.append(row)
        pos += n + 1
    ring = PolynomialRing(tuple(names), tuple(tuple(r) for r in grading_rows))
    presentation = CoordinatePresentation(
        cox_ring=ring, relations=Ideal(ring, ()), pic_rank=len(dims)
    )
    variety = EmbeddedVariety(
        kind="segre_veronese",
        presentation=presentation,
        bundle_degree=multidegree,
        gamma=SectionBasis(degree=multidegree, sections=()),
        section_order=section_order,
        dims=dims,
        multidegree=multidegree,
    )
    exps = variety.section_exponents(multidegree)
    variety.gamma = SectionBasis(
        degree=multidegree, sections=tuple(ring.monomial(e) for e in exps)
    )
    variety.ambient_ring = PolynomialRing(
        tuple(f"y{i}" for i in range(len(exps)))
    )
    return variety


def toric_variety(
    polytope: LatticePolytope | Sequence[Sequence[int]],
    dilation: int,
    section_order: str = "grevlex",
) -> EmbeddedVariety:
    """The toric variety of a polytope, embedded by a dilation of its class.

    Sections of dilation ``a`` are the lattice points of ``a * P``, realized
    as monomials ``s^a * t^q`` with a homogenizing variable ``s`` and the
    points translated to be componentwise nonnegative.
    """
    if not isinstance(polytope, LatticePolytope):
        polytope = LatticePolytope(polytope)
    if dilation < 1:
        raise ValueError("dilation must be at least 1")
    polytope.facets()  # validates full-dimensionality
    n = polytope.dim
    names = ("s",) + tuple(f"t{i + 1}" for i in range(n))
    grading = ((1,) + (0,) * n,)
    ring = PolynomialRing(names, grading)
    presentation = CoordinatePresentation(
        cox_ring=ring, relations=Ideal(ring, ()), pic_rank=1
    )
    variety = EmbeddedVariety(
        kind="toric",
        presentation=presentation,
        bundle_degree=(dilation,),
        gamma=SectionBasis(degree=(dilation,), sections=()),
        section_order=section_order,
        polytope=polytope,
        dilation=dilation,
    )
    exps = variety.section_exponents((dilation,))
    variety.gamma = SectionBasis(
        degree=(dilation,), sections=tuple(ring.monomial(e) for e in exps)
    )
    variety.ambient_ring = PolynomialRing(
        tuple(f"y{i}" for i in range(len(exps)))
    )
    return variety


def presented_variety(
    presentation: CoordinatePresentation,
    bundle_degree: Sequence[int],
    section_order: str = "grevlex",
    gamma_monomials: Sequence[Polynomial | str] | None = None,
) -> EmbeddedVariety:
    """A variety presented by generators and homogeneous relations.

    The section basis is the set of standard monomials of the bundle degree
    with respect to a grevlex basis of the relations, ordered canonically.  An
    explicit ``gamma_monomials`` list replaces it after verifying degrees,
    size, and linear independence modulo the relations.
    """
    bundle_degree = tuple(int(d) for d in bundle_degree)
    variety = EmbeddedVariety(
        kind="presented",
        presentation=presentation,
        bundle_degree=bundle_degree,
        gamma=SectionBasis(degree=bundle_degree, sections=()),
        section_order=section_order,
        gamma_overridden=gamma_monomials is not None,
    )
    standard = variety._standard_monomials(bundle_degree)
    ring = presentation.cox_ring
    if gamma_monomials is None:
        key = _order_key(section_order)
        exps = sorted(standard, key=key, reverse=True)
        sections = tuple(ring.monomial(e) for e in exps)
    else:
        sections = []
        for m in gamma_monomials:
            p = parse_polynomial(ring, m) if isinstance(m, str) else m
            if not p.is_monomial():
                raise ValueError("section overrides must be single monomials")
            if ring.multidegree(p.terms[0][0]) != bundle_degree:
                raise ValueError(
                    "a section override does not have the bundle multidegree"
                )
            sections.append(p)
        if len(sections) != len(standard):
            raise ValueError(
                f"section override has {len(sections)} monomials; "
                f"the degree piece has dimension {len(standard)}"
            )
        sections = tuple(sections)
    variety.gamma = SectionBasis(degree=bundle_degree, sections=sections)
    variety.ambient_ring = PolynomialRing(
        tuple(f"y{i}" for i in range(len(sections)))
    )
    # Building the expander verifies linear independence modulo relations.
    if sections:
        variety.expand_to_ambient(sections[0])
    return variety


def gamma_dim(variety: EmbeddedVariety, degree: Sequence[int]) -> int:
    """Dimension of the degree piece of the coordinate ring modulo relations."""
    return variety.gamma_dim(degree)


# -- JSON input ------------------------------------------------------------------


def presentation_from_json(data: dict) -> CoordinatePresentation:
    variables = tuple(data["variables"])
    grading = tuple(tuple(int(x) for x in row) for row in data.get("grading", []))
    ring = PolynomialRing(variables, grading)
    relations = Ideal(
        ring, tuple(parse_polynomial(ring, s) for s in data.get("relations", []))
    )
    return CoordinatePresentation(
        cox_ring=ring, relations=relations, pic_rank=ring.num_gradings
    )


def variety_from_json(data: dict) -> EmbeddedVariety:
    """Build a variety from the JSON input format.

    Keys: "kind" plus the kind-specific fields ("dims"/"multidegree",
    "points"/"dilation", or "variables"/"grading"/"relations"/"bundle_degree"),
    and an optional "section_order" that is "lex", "grevlex", or an explicit
    list of monomial strings (presented varieties only).
    """
    kind = data.get("kind")
    order = data.get("section_order", "grevlex")
    explicit = None
    if isinstance(order, (list, tuple)):
        explicit = list(order)
        order = "grevlex"
    if kind == "segre_veronese":
        if explicit is not None:
            raise ValueError("explicit section lists are only supported for presented varieties")
        return segre_veronese(data["dims"], data["multidegree"], section_order=order)
    if kind == "toric":
        if explicit is not None:
            raise ValueError("explicit section lists are only supported for presented varieties")
        return toric_variety(data["points"], int(data["dilation"]), section_order=order)
    if kind == "presented":
        pres = presentation_from_json(data)
        return presented_variety(
            pres,
            data["bundle_degree"],
            section_order=order,
            gamma_monomials=explicit,
        )
    raise ValueError(f"unknown variety kind {kind!r}")
