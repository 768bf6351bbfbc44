"""Finite models of the cohomology rings H*(P^N), H*(P^m x P^n), H*(Gr(k,m)).

A :class:`RingModel` carries an ordered additive basis, the cup product on
basis classes, the Poincare pairing, the anticanonical class, and the lattice
of effective curve classes.  Basis classes are tagged by monomial exponents
(``(a,)`` for H^a, ``(a, b)`` for H1^a H2^b) or by a partition for Schubert
classes.  All models are immutable after construction and every operation is
a pure function, so instances may be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import schubert
from .errors import ParameterError


@dataclass(frozen=True)
class Projective:
    n: int


@dataclass(frozen=True)
class Product:
    m: int
    n: int


@dataclass(frozen=True)
class Grassmannian:
    k: int
    m: int


Kind = Projective | Product | Grassmannian


@dataclass(frozen=True)
class BasisClass:
    """One additive basis element: exponent tuple or partition, plus codim."""

    tag: tuple[int, ...]
    codim: int


@dataclass(frozen=True)
class CurveClass:
    """Effective curve class; one component per generator of H_2."""

    components: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.components)


class ClassVector:
    """Finitely supported rational combination of basis classes."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[BasisClass, Fraction] | None = None):
        self.coeffs: dict[BasisClass, Fraction] = {}
        if coeffs:
            for cls, val in coeffs.items():
                val = Fraction(val)
                if val:
                    self.coeffs[cls] = val

    @classmethod
    def of(cls, basis_class: BasisClass, coeff=1) -> "ClassVector":
        return cls({basis_class: Fraction(coeff)})

    def __add__(self, other: "ClassVector") -> "ClassVector":
        out = dict(self.coeffs)
        for cls, val in other.coeffs.items():
            out[cls] = out.get(cls, Fraction(0)) + val
        return ClassVector(out)

    def scale(self, factor) -> "ClassVector":
        factor = Fraction(factor)
        return ClassVector({cls: val * factor for cls, val in self.coeffs.items()})

    def items(self):
        return self.coeffs.items()

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassVector) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "ClassVector(0)"
        terms = ", ".join(
            f"{val}*{cls.tag}" for cls, val in sorted(self.coeffs.items(), key=lambda kv: (kv[0].codim, kv[0].tag))
        )
        return f"ClassVector({terms})"


@dataclass(frozen=True, eq=False)
class RingModel:
    """Graded cohomology ring with finite basis and Poincare pairing."""

    kind: Kind
    complex_dimension: int
    basis: tuple[BasisClass, ...]
    curve_class_rank: int
    _index: dict[tuple[int, ...], BasisClass] = field(repr=False)
    _dual: dict[BasisClass, BasisClass] = field(repr=False)

    # -- basis access -------------------------------------------------------

    def class_by_tag(self, tag) -> BasisClass:
        tag = tuple(tag)
        if tag not in self._index:
            raise ParameterError(f"{tag} is not a basis tag of {self.kind}")
        return self._index[tag]

    @property
    def fundamental_class(self) -> BasisClass:
        return next(b for b in self.basis if b.codim == 0)

    @property
    def point_class(self) -> BasisClass:
        return next(b for b in self.basis if b.codim == self.complex_dimension)

    def dual(self, basis_class: BasisClass) -> BasisClass:
        return self._dual[basis_class]

    @property
    def pairing_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.basis)
        pos = {b: i for i, b in enumerate(self.basis)}
        rows = [[0] * n for _ in range(n)]
        for b in self.basis:
            rows[pos[b]][pos[self._dual[b]]] = 1
        return tuple(tuple(r) for r in rows)

    @property
    def c1(self) -> ClassVector:
        if isinstance(self.kind, Projective):
            return ClassVector.of(self.class_by_tag((1,)), self.kind.n + 1)
        if isinstance(self.kind, Product):
            h1 = ClassVector.of(self.class_by_tag((1, 0)), self.kind.m + 1)
            h2 = ClassVector.of(self.class_by_tag((0, 1)), self.kind.n + 1)
            return h1 + h2
        return ClassVector.of(self.class_by_tag((1,)), self.kind.m)

    # -- products and pairings ---------------------------------------------

    def cup(self, a, b) -> ClassVector:
        """Cup product, extended bilinearly; truncates beyond the dimension."""
        if isinstance(a, BasisClass) and isinstance(b, BasisClass):
            return self._cup_basis(a, b)
        va = a if isinstance(a, ClassVector) else ClassVector.of(a)
        vb = b if isinstance(b, ClassVector) else ClassVector.of(b)
        out = ClassVector()
        for ca, va_coeff in va.items():
            for cb, vb_coeff in vb.items():
                out = out + self._cup_basis(ca, cb).scale(va_coeff * vb_coeff)
        return out

    def cup_tags(self, a: BasisClass, b: BasisClass) -> BasisClass | None:
        """Monomial product of two basis classes, or None if it truncates.

        Exact (coefficient 1) for projective and product models; Grassmannian
        products are not monomial and must go through :meth:`cup`.
        """
        if isinstance(self.kind, Grassmannian):
            raise ParameterError("cup_tags is only defined for monomial models")
        tag = tuple(x + y for x, y in zip(a.tag, b.tag))
        return self._index.get(tag)

    def _cup_basis(self, a: BasisClass, b: BasisClass) -> ClassVector:
        for cls in (a, b):
            if cls not in self._dual:
                raise ParameterError(f"{cls} does not belong to {self.kind}")
        if isinstance(self.kind, Grassmannian):
            box_cols = self.kind.m - self.kind.k
            out = ClassVector()
            for nu, coeff in schubert.lr_coeffs(a.tag, b.tag, max_rows=self.kind.k).items():
                if schubert.fits_in_box(nu, self.kind.k, box_cols):
                    out = out + ClassVector.of(self.class_by_tag(nu), coeff)
            return out
        prod = self.cup_tags(a, b)
        return ClassVector.of(prod) if prod is not None else ClassVector()

    def pairing(self, u, v) -> Fraction:
        """Poincare pairing <u, v> = integral of u cup v."""
        vu = u if isinstance(u, ClassVector) else ClassVector.of(u)
        vv = v if isinstance(v, ClassVector) else ClassVector.of(v)
        total = Fraction(0)
        for ca, coeff_a in vu.items():
            for cb, coeff_b in vv.items():
                if self._dual[ca] == cb:
                    total += coeff_a * coeff_b
        return total

    def integral(self, u) -> Fraction:
        """Evaluation against the fundamental cycle (top-degree coefficient)."""
        vu = u if isinstance(u, ClassVector) else ClassVector.of(u)
        return vu.coeffs.get(self.point_class, Fraction(0))

    # -- curve classes -------------------------------------------------------

    def curve(self, *components) -> CurveClass:
        if len(components) == 1 and isinstance(components[0], (tuple, list)):
            components = tuple(components[0])
        if len(components) != self.curve_class_rank:
            raise ParameterError(
                f"curve class needs {self.curve_class_rank} components, got {components}"
            )
        return CurveClass(tuple(int(c) for c in components))

    def curve_zero(self) -> CurveClass:
        return CurveClass((0,) * self.curve_class_rank)

    def divisor_degree(self, divisor: BasisClass, a: CurveClass) -> int:
        """Intersection number of a codimension-1 basis class with a curve."""
        if divisor.codim != 1:
            raise ParameterError(f"{divisor} is not a divisor class")
        if isinstance(self.kind, Product):
            return a.components[0] if divisor.tag == (1, 0) else a.components[1]
        return a.components[0]

    def c1_dot(self, a: CurveClass) -> int:
        """Pairing of the anticanonical class against an effective curve."""
        if not a.is_effective:
            raise ParameterError(f"curve class {a.components} is not effective")
        total = 0
        for cls, coeff in self.c1.items():
            total += int(coeff) * self.divisor_degree(cls, a)
        return total

    def expected_dim(self, g: int, k: int, a: CurveClass) -> int:
        """Expected complex dimension (3 - dim X)(g - 1) + c1(X).A + k of the
        moduli of genus-g, k-pointed stable maps in class A."""
        if g < 0 or k < 0:
            raise ParameterError("genus and marked-point count must be nonnegative")
        return (3 - self.complex_dimension) * (g - 1) + self.c1_dot(a) + k


def make_model(kind: Kind) -> RingModel:
    """Build the ring model for P^N, P^m x P^n or Gr(k, m)."""
    if isinstance(kind, Projective):
        n = kind.n
        if n < 1:
            raise ParameterError(f"Projective needs N >= 1, got {n}")
        basis = tuple(BasisClass((a,), a) for a in range(n + 1))
        index = {b.tag: b for b in basis}
        dual = {b: index[(n - b.tag[0],)] for b in basis}
        model = RingModel(kind, n, basis, 1, index, dual)
    elif isinstance(kind, Product):
        m, n = kind.m, kind.n
        if m < 1 or n < 1:
            raise ParameterError(f"Product needs m, n >= 1, got {m}, {n}")
        tags = sorted(
            ((a, b) for a in range(m + 1) for b in range(n + 1)),
            key=lambda t: (t[0] + t[1], t),
        )
        basis = tuple(BasisClass(t, t[0] + t[1]) for t in tags)
        index = {b.tag: b for b in basis}
        dual = {b: index[(m - b.tag[0], n - b.tag[1])] for b in basis}
        model = RingModel(kind, m + n, basis, 2, index, dual)
    elif isinstance(kind, Grassmannian):
        k, m = kind.k, kind.m
        if not (0 < k < m):
            raise ParameterError(f"Grassmannian needs 0 < k < m, got k={k}, m={m}")
        cols = m - k
        parts = schubert.partitions_in_box(k, cols)
        basis = tuple(BasisClass(lam, schubert.weight(lam)) for lam in parts)
        index = {b.tag: b for b in basis}
        dual = {b: index[schubert.complement(b.tag, k, cols)] for b in basis}
        model = RingModel(kind, k * cols, basis, 1, index, dual)
    else:
        raise ParameterError(f"unknown model kind: {kind!r}")
    _check_invariants(model)
    return model


def _check_invariants(model: RingModel) -> None:
    dim = model.complex_dimension
    if sum(1 for b in model.basis if b.codim == 0) != 1:
        raise ParameterError("model must have a unique fundamental class")
    if sum(1 for b in model.basis if b.codim == dim) != 1:
        raise ParameterError("model must have a unique point class")
    for b in model.basis:
        partner = model.dual(b)
        if model.dual(partner) != b or b.codim + partner.codim != dim:
            raise ParameterError("pairing must be a degree-complementary involution")
