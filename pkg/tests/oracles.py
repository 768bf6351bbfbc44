"""Independent oracles used to pin expected values before trusting the engine.

Nothing in here imports the package's computational paths that it checks:

* ``kontsevich_plane_counts``: the classical recursion for the number N_d of
  rational degree-d plane curves through 3d - 1 general points,
* ``quantum_product_via_giambelli``: Schubert-class products in the small
  quantum ring of Gr(k, m) computed from the quantum Pieri rule and the
  Giambelli determinant, with no rim hooks anywhere,
* frozen geometric counts whose derivations are recorded next to them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb


def kontsevich_plane_counts(dmax: int) -> dict[int, int]:
    """N_1 = 1 and, for d >= 2,
    N_d = sum_{dA+dB=d} N_dA N_dB dA^2 dB (dB C(3d-4, 3dA-2) - dA C(3d-4, 3dA-1)).
    """
    counts: dict[int, Fraction] = {1: Fraction(1)}
    for d in range(2, dmax + 1):
        total = Fraction(0)
        for da in range(1, d):
            db = d - da
            total += (
                counts[da] * counts[db] * da * da * db
                * (db * comb(3 * d - 4, 3 * da - 2) - da * comb(3 * d - 4, 3 * da - 1))
            )
        counts[d] = total
    result = {}
    for d, value in counts.items():
        assert value.denominator == 1
        result[d] = int(value)
    return result


# geometric counts, frozen after the derivations below:
#   * bidegree (1,1) curves on P1 x P1 through 3 points: the (1,1) system is
#     a P3 of divisors, all rational; three point conditions are linear and
#     leave one curve.
#   * bidegree (2,2) rational curves through 7 points: the pencil of (2,2)
#     curves through 7 general points has 8 base points; blowing them up
#     gives a rational elliptic surface of Euler number 4 + 8 = 12, and each
#     of the 12 singular (nodal, rational) fibers contributes 1.
#   * bidegree (1,d) and (d,1) curves through 2d+1 points: the linear system
#     is a P^{2d+1} of rational curves, so the point conditions leave 1.
POINT_COUNTS_P1XP1 = {
    (1, 1): 1,
    (2, 2): 12,
    (1, 2): 1,
    (2, 1): 1,
    (1, 3): 1,
}

# lines in P3: through 2 points: 1; through a point meeting 2 general lines:
# 1; meeting 4 general lines: 2 (the two rulings argument / sigma_1^4 = 2).
LINE_COUNTS_P3 = {"pt_pt": 1, "pt_line_line": 1, "line^4": 2}


def _horizontal_strips_in_box(lam, size, rows, cols):
    padded = list(lam) + [0] * (rows - len(lam))

    def grow(i, remaining, mu):
        if i == rows:
            if remaining == 0:
                yield tuple(p for p in mu if p)
            return
        upper = min(padded[i - 1] if i else cols, cols, padded[i] + remaining)
        for mi in range(padded[i], upper + 1):
            yield from grow(i + 1, remaining - (mi - padded[i]), mu + [mi])

    yield from grow(0, size, [])


def quantum_pieri(k: int, m: int, p: int, lam) -> dict[tuple[tuple, int], int]:
    """sigma_p * sigma_lam on Gr(k, m): classical Pieri terms in the box, plus
    q times the classes nu with |nu| = |lam| + p - m interlacing
    lam_1 - 1 >= nu_1 >= lam_2 - 1 >= ... >= lam_k - 1 >= nu_k >= 0.
    """
    cols = m - k
    assert 0 <= p <= cols
    out: dict[tuple[tuple, int], int] = {}
    for mu in _horizontal_strips_in_box(lam, p, k, cols):
        out[(mu, 0)] = out.get((mu, 0), 0) + 1
    target = sum(lam) + p - m
    if target >= 0:
        padded = list(lam) + [0] * (k - len(lam))

        def grow(i, remaining, nu):
            if i == k:
                if remaining == 0:
                    yield tuple(x for x in nu if x)
                return
            hi = padded[i] - 1
            lo = padded[i + 1] - 1 if i + 1 < k else 0
            lo = max(lo, 0)
            for v in range(lo, min(hi, remaining) + 1):
                yield from grow(i + 1, remaining - v, nu + [v])

        for nu in grow(0, target, []):
            out[(nu, 1)] = out.get((nu, 1), 0) + 1
    return out


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i):
            if perm[j] > perm[i]:
                sign = -sign
    return sign


def quantum_product_via_giambelli(k: int, m: int, lam, mu) -> dict[tuple[tuple, int], int]:
    """sigma_lam * sigma_mu in QH*(Gr(k, m)) through quantum Pieri only.

    sigma_mu = det(sigma_{mu_i + j - i}) remains valid with quantum products
    (entries outside 0..m-k vanish), so expanding the determinant and
    multiplying the special factors onto sigma_lam by quantum Pieri gives an
    algorithm with no rim-hook step at all.
    """
    cols = m - k
    lam = tuple(lam)
    mu = tuple(mu)
    ell = len(mu)
    total: dict[tuple[tuple, int], int] = {}
    if ell == 0:
        return {(lam, 0): 1}
    for perm in permutations(range(ell)):
        sizes = [mu[i] + perm[i] - i for i in range(ell)]
        if any(s < 0 or s > cols for s in sizes):
            continue
        state: dict[tuple[tuple, int], int] = {(lam, 0): 1}
        for p in sizes:
            if p == 0:
                continue
            nxt: dict[tuple[tuple, int], int] = {}
            for (shape, d0), coeff in state.items():
                for (shape2, dinc), c2 in quantum_pieri(k, m, p, shape).items():
                    key = (shape2, d0 + dinc)
                    nxt[key] = nxt.get(key, 0) + coeff * c2
            state = nxt
        sign = _perm_sign(perm)
        for key, coeff in state.items():
            total[key] = total.get(key, 0) + sign * coeff
    return {key: c for key, c in total.items() if c}


def quantum_3point_via_giambelli(k: int, m: int, lam, mu, nu, d: int) -> int:
    """<sigma_lam, sigma_mu, sigma_nu>_d through the Pieri-Giambelli route."""
    cols = m - k
    padded = list(nu) + [0] * (k - len(nu))
    dual = tuple(x for x in (cols - padded[i] for i in reversed(range(k))) if x)
    return quantum_product_via_giambelli(k, m, lam, mu).get((dual, d), 0)
