"""Genus-0 Gromov-Witten invariants for divisor-generated models.

All invariants are reconstructed from the Kontsevich-Manin axioms with exact
rational arithmetic:

* dimension axiom: the invariant vanishes unless the total codimension of the
  insertions equals dim X + c1(X).A + k - 3,
* fundamental-class and mapping-to-point axioms for degree 0,
* divisor axiom: a codimension-1 insertion contributes the factor (delta.A),
* WDVV associativity, used as a recursion: with insertions sorted by
  increasing codimension, the first one of codimension >= 2 is factored as
  delta cup eps (delta a hyperplane factor) and the four-point exchange
  relation on (delta, eps, g2, g3) isolates the unknown invariant with
  coefficient one through its degree-0 three-point term.

Termination: splitting terms strictly lower the c1-degree of the curve class;
degenerate terms lose an insertion after the divisor axiom; the single
remaining same-degree term trades the codimension pair (c1, c2) for
(c1 - 1, c2 + 1) with c1 <= c2, which strictly increases the sum of squared
codimensions, bounded by k * dim^2.

Keys are canonical (sorted insertion multisets), so the memo table is shared
across permutations of the same invariant.  The table is lock-guarded and
idempotent: concurrent writers must agree, and a single-threaded build pays
one uncontended lock per lookup.
"""

from __future__ import annotations

import sys
import threading
from fractions import Fraction
from itertools import combinations, product

from .cohmodel import (
    BasisClass,
    ClassVector,
    CurveClass,
    Grassmannian,
    Product,
    Projective,
    RingModel,
)
from .errors import InternalCheckError, ParameterError, UnsupportedModelError
from . import schubert

InvariantKey = tuple[object, tuple[int, ...], tuple[tuple[int, ...], ...]]


def make_key(model: RingModel, a: CurveClass, classes) -> InvariantKey:
    """Canonical memo key: model kind, curve class, sorted insertion tags."""
    tags = tuple(sorted((cls.codim, cls.tag) for cls in classes))
    return (model.kind, a.components, tuple(tag for _, tag in tags))


class MemoTable:
    """Associative cache of invariant values.

    Writers racing on one key must store equal values; a mismatch means a
    broken computation and raises immediately.
    """

    def __init__(self):
        self._data: dict[InvariantKey, Fraction] = {}
        self._lock = threading.Lock()

    def get(self, key: InvariantKey) -> Fraction | None:
        with self._lock:
            return self._data.get(key)

    def put(self, key: InvariantKey, value: Fraction) -> Fraction:
        with self._lock:
            prev = self._data.get(key)
            if prev is not None and prev != value:
                raise InternalCheckError(f"memo value changed for {key}: {prev} -> {value}")
            self._data[key] = value
            return value

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)

    def snapshot(self) -> dict[InvariantKey, Fraction]:
        with self._lock:
            return dict(self._data)

    def load(self, entries: dict[InvariantKey, Fraction]) -> None:
        for key, value in entries.items():
            self.put(key, value)


_default_memo = MemoTable()


def default_memo() -> MemoTable:
    return _default_memo


def gw0(model: RingModel, a, insertions, memo: MemoTable | None = None,
        prefer_second_split: bool = False) -> Fraction:
    """Genus-0 Gromov-Witten invariant GW_{X,A}(gamma_1, ..., gamma_k).

    ``a`` is a CurveClass (or raw components) on a Projective or Product
    model; insertions are basis classes or rational class vectors, expanded
    multilinearly.  Returns an exact Fraction.

    ``prefer_second_split`` flips which hyperplane factor is split off on
    product models, forcing an independent recursion path to the same value;
    keys for the two conventions are kept apart in the memo table.
    """
    if isinstance(model.kind, Grassmannian):
        raise UnsupportedModelError(
            "WDVV reconstruction needs a divisor-generated model; "
            "use gw0_grassmannian_3pt for Grassmannians"
        )
    if not isinstance(a, CurveClass):
        a = model.curve(a if isinstance(a, (tuple, list)) else (a,))
    if len(a.components) != model.curve_class_rank:
        raise ParameterError(f"curve class rank mismatch: {a.components}")
    if not a.is_effective:
        raise ParameterError(f"curve class {a.components} is not effective")
    if a.is_zero and len(insertions) < 3:
        raise ParameterError("degree-0 invariants need at least 3 insertions")
    memo = memo or _default_memo
    vectors = []
    for ins in insertions:
        if isinstance(ins, BasisClass):
            vectors.append(((ins, Fraction(1)),))
        elif isinstance(ins, ClassVector):
            if ins.is_zero:
                return Fraction(0)
            vectors.append(tuple(ins.items()))
        else:
            raise ParameterError(f"insertion {ins!r} is neither a class nor a vector")
    for choices in vectors:
        for cls, _ in choices:
            if cls.tag not in model._index or model._index[cls.tag] != cls:
                raise ParameterError(f"insertion {cls} does not belong to {model.kind}")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    total = Fraction(0)
    for pick in product(*vectors):
        coeff = Fraction(1)
        for _, c in pick:
            coeff *= c
        term = _gw(model, a, _sorted_classes(cls for cls, _ in pick), memo, prefer_second_split)
        total += coeff * term
    return total


def gw0_grassmannian_3pt(k: int, m: int, lam, mu, nu, d: int) -> Fraction:
    """3-point genus-0 invariant of Gr(k, m), exposed on the engine surface."""
    return Fraction(schubert.quantum_3point(k, m, lam, mu, nu, d))


def _sorted_classes(classes) -> tuple[BasisClass, ...]:
    return tuple(sorted(classes, key=lambda cls: (cls.codim, cls.tag)))


def _gw(model: RingModel, a: CurveClass, classes: tuple[BasisClass, ...], memo: MemoTable,
        alt: bool = False) -> Fraction:
    key = make_key(model, a, classes) if not alt else make_key(model, a, classes) + ("alt",)
    cached = memo.get(key)
    if cached is not None:
        return cached
    value = _gw_uncached(model, a, classes, memo, alt)
    return memo.put(key, value)


def _gw_uncached(model: RingModel, a: CurveClass, classes: tuple[BasisClass, ...], memo: MemoTable,
                 alt: bool = False) -> Fraction:
    k = len(classes)
    total_codim = sum(cls.codim for cls in classes)
    if total_codim != model.expected_dim(0, k, a):
        return Fraction(0)
    if a.is_zero:
        if k == 3:
            triple = model.cup(model.cup(classes[0], classes[1]), classes[2])
            return model.integral(triple)
        return Fraction(0)
    # degree nonzero: fundamental-class and divisor axioms
    if classes and classes[0].codim == 0:
        return Fraction(0)
    if classes and classes[0].codim == 1:
        factor = model.divisor_degree(classes[0], a)
        if factor == 0:
            return Fraction(0)
        return factor * _gw(model, a, classes[1:], memo, alt)
    if k <= 2:
        return _seed(model, a, classes)
    return _wdvv_solve(model, a, classes, memo, alt)


def _seed(model: RingModel, a: CurveClass, classes: tuple[BasisClass, ...]) -> Fraction:
    """Base invariants with at most two insertions, all of codimension >= 2.

    The dimension axiom already holds here, which confines the possibilities
    to honest first-principles counts:

    * no insertions: only the identity map P^1 -> P^1 (value 1),
    * one insertion: the unique ruling line through a point in a product
      with a P^1 factor,
    * two insertions: the line through two general points of P^N, or the
      ruling line of P^m x P^n through one point of each of two cycles that
      fix the fiber and span it.
    """
    kind = model.kind
    k = len(classes)
    if isinstance(kind, Projective):
        if k == 0:
            # dimension axiom forces N = 1, d = 1: the identity map of P^1
            if kind.n == 1 and a.components == (1,):
                return Fraction(1)
            raise InternalCheckError(f"unreachable projective seed {a}")
        if k == 2:
            n = kind.n
            if a.components == (1,) and all(cls.codim == n for cls in classes):
                return Fraction(1)
            return Fraction(0)
        raise InternalCheckError(f"unreachable projective seed {a} {classes}")
    m, n = kind.m, kind.n
    d1, d2 = a.components
    if k == 0:
        raise InternalCheckError(f"unreachable product seed {a}")
    if k == 1:
        (cls,) = classes
        if d1 == 1 and d2 == 0 and m == 1 and cls == model.point_class:
            return Fraction(1)
        if d1 == 0 and d2 == 1 and n == 1 and cls == model.point_class:
            return Fraction(1)
        raise InternalCheckError(f"unreachable product seed {a} {classes}")
    u, v = classes
    (au, bu), (av, bv) = u.tag, v.tag
    if d2 == 0 and d1 >= 1:
        if d1 == 1 and au == av == m and bu + bv == n:
            return Fraction(1)
        return Fraction(0)
    if d1 == 0 and d2 >= 1:
        if d2 == 1 and bu == bv == n and au + av == m:
            return Fraction(1)
        return Fraction(0)
    raise InternalCheckError(f"unreachable product seed {a} {classes}")


def _split_divisor(model: RingModel, cls: BasisClass, prefer_second: bool = False):
    """Factor a codim >= 2 monomial as (hyperplane divisor, complement)."""
    if isinstance(model.kind, Projective):
        delta = model.class_by_tag((1,))
        eps = model.class_by_tag((cls.tag[0] - 1,))
        return delta, eps
    a, b = cls.tag
    first = (a > 0) if not prefer_second else not (b > 0)
    if first:
        return model.class_by_tag((1, 0)), model.class_by_tag((a - 1, b))
    return model.class_by_tag((0, 1)), model.class_by_tag((a, b - 1))


def _curve_decompositions(a: CurveClass):
    """All ordered pairs a = a1 + a2 of effective classes, zero parts allowed."""
    if len(a.components) == 1:
        (d,) = a.components
        for i in range(d + 1):
            yield CurveClass((i,)), CurveClass((d - i,))
    else:
        d1, d2 = a.components
        for i in range(d1 + 1):
            for j in range(d2 + 1):
                yield CurveClass((i, j)), CurveClass((d1 - i, d2 - j))


def _curve_splittings(a: CurveClass):
    """All ways a = a1 + a2 with both parts effective and nonzero."""
    for a1, a2 in _curve_decompositions(a):
        if not a1.is_zero and not a2.is_zero:
            yield a1, a2


def _wdvv_solve(model: RingModel, a: CurveClass, classes: tuple[BasisClass, ...], memo: MemoTable,
                alt: bool = False) -> Fraction:
    """Solve for GW_A(classes) from the four-point exchange relation.

    With gamma_1 = delta cup eps and partners (gamma_2, gamma_3):

      X = GW_A(delta.g2, eps, g3, R) + GW_A(delta, g2, R, eps.g3)
          - GW_A(delta, eps, R, g2.g3)
          + S(delta, g2; eps, g3) - S(delta, eps; g2, g3)

    where S collects the splittings of A into two nonzero effective parts.
    """
    g1, g2, g3 = classes[0], classes[1], classes[2]
    rest = classes[3:]
    delta, eps = _split_divisor(model, g1, alt)

    def term(extra: BasisClass | None, others: tuple[BasisClass, ...]) -> Fraction:
        if extra is None:
            return Fraction(0)
        return _gw(model, a, _sorted_classes(others + (extra,)), memo, alt)

    t1 = term(model.cup_tags(delta, g2), (eps, g3) + rest)
    t2 = term(model.cup_tags(eps, g3), (delta, g2) + rest)
    t3 = term(model.cup_tags(g2, g3), (delta, eps) + rest)
    s_plus = _split_sum(model, a, delta, g2, eps, g3, rest, memo, alt)
    s_minus = _split_sum(model, a, delta, eps, g2, g3, rest, memo, alt)
    return t1 + t2 - t3 + s_plus - s_minus


def _split_sum(model: RingModel, a: CurveClass, x: BasisClass, y: BasisClass,
               z: BasisClass, w: BasisClass, rest: tuple[BasisClass, ...],
               memo: MemoTable, alt: bool = False) -> Fraction:
    """sum over A1 + A2 = A (both nonzero), R1 + R2 = rest and the diagonal
    basis of GW_{A1}(x, y, R1, T) * GW_{A2}(T^, z, w, R2)."""
    total = Fraction(0)
    dim = model.complex_dimension
    indices = range(len(rest))
    for a1, a2 in _curve_splittings(a):
        c1_a1 = model.c1_dot(a1)
        for size in range(len(rest) + 1):
            for chosen in combinations(indices, size):
                chosen_set = set(chosen)
                r1 = tuple(rest[i] for i in chosen)
                r2 = tuple(rest[i] for i in indices if i not in chosen_set)
                # the diagonal class is pinned to one codimension by the
                # dimension axiom on the first factor
                need = dim - 3 + c1_a1 + len(r1) + 3 - x.codim - y.codim - sum(c.codim for c in r1)
                if need < 0 or need > dim:
                    continue
                first_base = (x, y) + r1
                second_base = (z, w) + r2
                for t in model.basis:
                    if t.codim != need:
                        continue
                    f1 = _gw(model, a1, _sorted_classes(first_base + (t,)), memo, alt)
                    if not f1:
                        continue
                    f2 = _gw(model, a2, _sorted_classes(second_base + (model.dual(t),)), memo, alt)
                    if f2:
                        total += f1 * f2
    return total


def wdvv_residual(model: RingModel, a, x, y, z, w, rest=(), memo: MemoTable | None = None) -> Fraction:
    """Left minus right side of the WDVV relation on (x, y | z, w) with
    spectators ``rest``; zero for every valid input.

    Evaluated directly through :func:`gw0`, including the degenerate degree-0
    pieces, so a nonzero value would expose an inconsistent engine.
    """
    if not isinstance(a, CurveClass):
        a = model.curve(a if isinstance(a, (tuple, list)) else (a,))
    memo = memo or _default_memo

    def side(p, q, r, s) -> Fraction:
        total = Fraction(0)
        indices = range(len(rest))
        for a1, a2 in _curve_decompositions(a):
            for size in range(len(rest) + 1):
                for chosen in combinations(indices, size):
                    chosen_set = set(chosen)
                    r1 = tuple(rest[i] for i in chosen)
                    r2 = tuple(rest[i] for i in indices if i not in chosen_set)
                    for t in model.basis:
                        f1 = gw0(model, a1, [p, q, *r1, t], memo)
                        if not f1:
                            continue
                        f2 = gw0(model, a2, [model.dual(t), r, s, *r2], memo)
                        if f2:
                            total += f1 * f2
        return total

    return side(x, y, z, w) - side(x, z, y, w)
