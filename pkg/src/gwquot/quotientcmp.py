"""Quotient comparison: genus-0 invariants of X versus those of X // G.

Two families are implemented.

* ``TorusPair(m, n)``: the C*-action t.(z, w) = (tz, t^{-1}w) on P^{m+n+1};
  the quotient of the semistable locus is P^m x P^n, a degree-d curve pushes
  to bidegree (d, d), the correspondence pulls H1^a H2^b back to H^{a+b},
  and the rational slice is a hyperplane.
* ``GrassmannQuot(m, n)``: the SL_n-action on P(Hom(C^m, C^n)) = P^{mn-1};
  the quotient of the rank-n locus by A |-> Ker A is Gr(m-n, C^m), degree d
  pushes to n*d lines, a Schubert class sigma_lambda pulls back to
  d(lambda) * H^{|lambda|}, and the slice class is H^{n^2-1} (the closure of
  a fiber is a (n^2-1)-plane).

``verify_comparison`` evaluates both sides of

    GW_{X//G, push(A)}(a_1, ..., a_k) = GW_{X, A}(pull(a_1) cup zeta, pull(a_2), ...)

exactly and reports whether they agree, together with the expected-dimension
ledger: at genus g the two expected dimensions differ by exactly g * dim G,
so the comparison is dimensionally consistent precisely in genus zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import schubert
from .cohmodel import (
    BasisClass,
    ClassVector,
    CurveClass,
    Grassmannian,
    Product,
    Projective,
    RingModel,
    make_model,
)
from .errors import (
    InternalCheckError,
    ParameterError,
    UnsupportedConfigurationError,
)
from .gwengine import MemoTable, gw0, gw0_grassmannian_3pt


@dataclass(frozen=True)
class TorusPair:
    m: int
    n: int


@dataclass(frozen=True)
class GrassmannQuot:
    m: int
    n: int


FamilyKind = TorusPair | GrassmannQuot


@dataclass(frozen=True, eq=False)
class QuotientFamily:
    kind: FamilyKind
    upstairs: RingModel
    downstairs: RingModel
    dim_G: int
    slice_class: BasisClass


@dataclass(frozen=True)
class DimensionLedger:
    """Expected-dimension bookkeeping for one (g, k, d) configuration."""

    d_hat: int
    d_minus_dim_g: int
    gap: int
    real_dim_2d: int | None


@dataclass(frozen=True)
class ComparisonReport:
    lhs: Fraction
    rhs: Fraction
    equal: bool
    lhs_dim_ok: bool
    rhs_dim_ok: bool
    ledger: DimensionLedger
    zeta_slot: int
    warnings: tuple[str, ...]


def make_family(kind: FamilyKind) -> QuotientFamily:
    """Build the two ring models and slice data for a quotient family."""
    if isinstance(kind, TorusPair):
        m, n = kind.m, kind.n
        if m < 1 or n < 1:
            raise ParameterError(f"TorusPair needs m, n >= 1, got {m}, {n}")
        upstairs = make_model(Projective(m + n + 1))
        downstairs = make_model(Product(m, n))
        return QuotientFamily(kind, upstairs, downstairs, 1, upstairs.class_by_tag((1,)))
    if isinstance(kind, GrassmannQuot):
        m, n = kind.m, kind.n
        if not (0 < n < m):
            raise ParameterError(f"GrassmannQuot needs 0 < n < m, got m={m}, n={n}")
        upstairs = make_model(Projective(m * n - 1))
        downstairs = make_model(Grassmannian(m - n, m))
        return QuotientFamily(
            kind, upstairs, downstairs, n * n - 1, upstairs.class_by_tag((n * n - 1,))
        )
    raise ParameterError(f"unknown family kind: {kind!r}")


def pushforward_class(family: QuotientFamily, d: int) -> CurveClass:
    """Image of d times the line class of X under the quotient map."""
    if d < 0:
        raise ParameterError("degree must be nonnegative")
    if isinstance(family.kind, TorusPair):
        return family.downstairs.curve(d, d)
    return family.downstairs.curve(family.kind.n * d)


def pullback_class(family: QuotientFamily, alpha_hat: BasisClass) -> ClassVector:
    """Correspondence pullback of a downstairs basis class.

    Codimension is preserved; the map is only defined on basis classes and
    extended linearly, since the graph-closure pullback of a rational map is
    not a ring homomorphism.
    """
    if alpha_hat.tag not in {b.tag for b in family.downstairs.basis}:
        raise ParameterError(f"{alpha_hat} is not a downstairs basis class")
    if isinstance(family.kind, TorusPair):
        a, b = alpha_hat.tag
        return ClassVector.of(family.upstairs.class_by_tag((a + b,)))
    m, n = family.kind.m, family.kind.n
    coeff = schubert.dlambda(alpha_hat.tag, m, n).value
    return ClassVector.of(family.upstairs.class_by_tag((alpha_hat.codim,)), coeff)


def dimension_ledger(family: QuotientFamily, g: int, k: int, d: int) -> DimensionLedger:
    """Expected dimensions downstairs and upstairs-minus-group, their gap
    g * dim G, and (torus case) the real dimension of the gauged map space
    2(1-g)(dim X - 1) + 2 c1(X).A + 2k."""
    if g < 0 or k < 0 or d < 0:
        raise ParameterError("g, k, d must be nonnegative")
    a_hat = pushforward_class(family, d)
    a_up = family.upstairs.curve(d)
    d_hat = family.downstairs.expected_dim(g, k, a_hat)
    d_minus = family.upstairs.expected_dim(g, k, a_up) - family.dim_G
    gap = d_hat - d_minus
    if gap != g * family.dim_G:
        raise InternalCheckError(f"dimension gap {gap} != g*dimG = {g * family.dim_G}")
    real_2d = None
    if isinstance(family.kind, TorusPair):
        dim_x = family.upstairs.complex_dimension
        real_2d = 2 * (1 - g) * (dim_x - 1) + 2 * family.upstairs.c1_dot(a_up) + 2 * k
    return DimensionLedger(d_hat, d_minus, gap, real_2d)


def grassmann_k_formula(lam_list, m: int, n: int, d: int) -> int:
    """Number of insertions balancing the Grassmannian comparison:
    k = sum |lambda_j| - mnd - n(m-n) + 3."""
    lams = [schubert.normalize_partition(lam) for lam in lam_list]
    return sum(schubert.weight(lam) for lam in lams) - m * n * d - n * (m - n) + 3


def _projective_face(family: QuotientFamily):
    """When the downstairs Grassmannian is a projective space, return the
    matching Projective model and the tag translation, else None."""
    kind = family.downstairs.kind
    k, m = kind.k, kind.m
    if k == 1:
        return make_model(Projective(m - 1)), lambda lam: (sum(lam),)
    if k == m - 1:
        # Gr(m-1, m) is the dual projective space; columns become powers of H
        return make_model(Projective(m - 1)), lambda lam: (len(lam),)
    return None


def verify_comparison(family: QuotientFamily, d: int, insertions,
                      zeta_slot: int = 1, memo: MemoTable | None = None) -> ComparisonReport:
    """Evaluate both sides of the quotient comparison identity exactly.

    ``insertions`` are downstairs basis classes; the slice class is cupped
    onto the insertion in ``zeta_slot`` (1-indexed; the identity is stated
    with the slice on the first slot, other slots are exposed so that slot
    independence can be recorded).
    """
    if d < 1:
        raise ParameterError("comparison needs degree d >= 1")
    insertions = list(insertions)
    k = len(insertions)
    if k == 0:
        raise ParameterError("comparison needs at least one insertion")
    if not 1 <= zeta_slot <= k:
        raise ParameterError(f"zeta_slot must be in 1..{k}")
    for cls in insertions:
        if cls.tag not in {b.tag for b in family.downstairs.basis}:
            raise ParameterError(f"{cls} is not a downstairs basis class")

    warnings: list[str] = []
    a_hat = pushforward_class(family, d)
    a_up = family.upstairs.curve(d)

    # downstairs invariant
    if isinstance(family.kind, TorusPair):
        lhs = gw0(family.downstairs, a_hat, insertions, memo=memo)
    else:
        balanced_k = grassmann_k_formula(
            [cls.tag for cls in insertions], family.kind.m, family.kind.n, d
        )
        if balanced_k != k:
            warnings.append(
                f"insertion count {k} differs from the dimensionally balanced k={balanced_k}"
            )
        face = _projective_face(family)
        if k == 3:
            kind = family.downstairs.kind
            lhs = gw0_grassmannian_3pt(
                kind.k, kind.m,
                insertions[0].tag, insertions[1].tag, insertions[2].tag,
                family.kind.n * d,
            )
        elif face is not None:
            model, translate = face
            mapped = [model.class_by_tag(translate(cls.tag)) for cls in insertions]
            lhs = gw0(model, (family.kind.n * d,), mapped, memo=memo)
        else:
            raise UnsupportedConfigurationError(
                "k-point Grassmannian invariants with k != 3 are only available "
                "when the Grassmannian is a projective space"
            )

    # upstairs invariant with the slice on one slot
    pulled = [pullback_class(family, cls) for cls in insertions]
    pulled[zeta_slot - 1] = family.upstairs.cup(pulled[zeta_slot - 1],
                                                ClassVector.of(family.slice_class))
    rhs = gw0(family.upstairs, a_up, pulled, memo=memo)

    lhs_dim_ok = (
        sum(cls.codim for cls in insertions)
        == family.downstairs.expected_dim(0, k, a_hat)
    )
    rhs_dim_ok = (
        sum(cls.codim for cls in insertions) + family.dim_G
        == family.upstairs.expected_dim(0, k, a_up)
    )
    ledger = dimension_ledger(family, 0, k, d)
    return ComparisonReport(
        lhs=Fraction(lhs),
        rhs=Fraction(rhs),
        equal=lhs == rhs,
        lhs_dim_ok=lhs_dim_ok,
        rhs_dim_ok=rhs_dim_ok,
        ledger=ledger,
        zeta_slot=zeta_slot,
        warnings=tuple(warnings),
    )
