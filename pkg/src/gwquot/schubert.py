"""Partition combinatorics and Schubert calculus kernels.

Partitions are canonical tuples of strictly positive, weakly decreasing
integers; ``()`` is the empty partition.  On top of them this module provides

* the Pieri rule inside a box (horizontal strips),
* classical Littlewood-Richardson coefficients, computed two ways: by
  lattice-word tableau enumeration (slow, transparent) and by iterated Pieri
  through the Jacobi-Trudi expansion (fast path),
* the degeneracy-locus degrees d(lambda): the degree in P^{mn-1} of the locus
  of homomorphisms C^m -> C^n whose kernel meets a fixed flag in prescribed
  dimensions, via the flagged determinantal formula
  ``d(lambda) = det( [H^{lambda_i+j-i}] (1-H)^{-(n+i-lambda_i)} )``,
* quantum Littlewood-Richardson coefficients for Gr(k, m) by m-rim-hook
  reduction on beta-sets, and the 3-point genus-0 Grassmannian invariants
  they encode.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial

from .errors import InternalCheckError, ParameterError

Partition = tuple[int, ...]


def normalize_partition(parts) -> Partition:
    """Canonical form: drop zeros, check weak decrease and positivity."""
    lam = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in lam):
        raise ParameterError(f"partition parts must be nonnegative: {parts}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ParameterError(f"partition parts must weakly decrease: {parts}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def fits_in_box(lam: Partition, rows: int, cols: int) -> bool:
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def complement(lam: Partition, rows: int, cols: int) -> Partition:
    """Poincare-dual partition inside the rows x cols box."""
    if not fits_in_box(lam, rows, cols):
        raise ParameterError(f"{lam} does not fit in a {rows}x{cols} box")
    padded = list(lam) + [0] * (rows - len(lam))
    return normalize_partition(cols - padded[i] for i in reversed(range(rows)))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions inside a rows x cols box, graded then lexicographic."""
    out: list[Partition] = []

    def grow(prefix: list[int], maximum: int) -> None:
        out.append(normalize_partition(prefix))
        if len(prefix) < rows:
            for part in range(1, maximum + 1):
                grow(prefix + [part], part)

    grow([], cols)
    out.sort(key=lambda lam: (weight(lam), lam))
    return out


def pieri(lam: Partition, p: int, box: tuple[int, int]) -> list[Partition]:
    """All mu in the box with mu/lam a horizontal p-strip."""
    lam = normalize_partition(lam)
    rows, cols = box
    if p < 0:
        raise ParameterError("strip size must be nonnegative")
    if not fits_in_box(lam, rows, cols):
        raise ParameterError(f"{lam} does not fit in a {rows}x{cols} box")
    padded = list(lam) + [0] * (rows - len(lam))
    results: list[Partition] = []

    def grow(i: int, remaining: int, mu: list[int]) -> None:
        if i == rows:
            if remaining == 0:
                results.append(normalize_partition(mu))
            return
        upper = padded[i - 1] if i > 0 else cols
        low = padded[i]
        # horizontal strip: lam_i <= mu_i <= lam_{i-1}
        for mi in range(low, min(upper, cols, low + remaining) + 1):
            grow(i + 1, remaining - (mi - low), mu + [mi])

    grow(0, p, [])
    return sorted(results)


# ---------------------------------------------------------------------------
# classical Littlewood-Richardson coefficients
# ---------------------------------------------------------------------------

def _horizontal_strips(lam: list[int], size: int, max_rows: int):
    """Yield partitions mu >= lam with mu/lam a horizontal strip of `size`."""
    padded = lam + [0] * (max_rows + 1 - len(lam))

    def grow(i: int, remaining: int, mu: list[int]):
        if i == len(padded):
            if remaining == 0:
                yield [m for m in mu if m]
            return
        upper = mu[i - 1] if i > 0 else padded[i] + remaining
        upper = min(upper, padded[i] + remaining)
        if i > 0:
            upper = min(upper, padded[i - 1])
        for mi in range(padded[i], upper + 1):
            yield from grow(i + 1, remaining - (mi - padded[i]), mu + [mi])

    yield from grow(0, size, [])


def lr_coeffs(lam, mu, max_rows: int) -> dict[Partition, int]:
    """c^nu_{lam,mu} for all nu with at most max_rows rows (iterated Pieri).

    Expands s_mu by Jacobi-Trudi, s_mu = det(h_{mu_i+j-i}), and applies the
    Pieri rule term by term.  Fast path; the tableau enumeration below is the
    reference implementation.
    """
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    acc: dict[Partition, int] = {}
    for sign, strip_sizes in _jacobi_trudi_terms(mu):
        layer: dict[Partition, int] = {lam: 1}
        for size in strip_sizes:
            nxt: dict[Partition, int] = {}
            for shape, coeff in layer.items():
                for grown in _horizontal_strips(list(shape), size, max_rows):
                    if len(grown) <= max_rows:
                        key = tuple(grown)
                        nxt[key] = nxt.get(key, 0) + coeff
            layer = nxt
        for shape, coeff in layer.items():
            acc[shape] = acc.get(shape, 0) + sign * coeff
    return {nu: c for nu, c in acc.items() if c}


def _jacobi_trudi_terms(mu: Partition):
    """Signed products of h-indices in det(h_{mu_i + j - i})."""
    ell = len(mu)
    if ell == 0:
        yield 1, ()
        return
    for perm in permutations(range(ell)):
        sign = _perm_sign(perm)
        sizes = []
        ok = True
        for i in range(ell):
            idx = mu[i] + perm[i] - i
            if idx < 0:
                ok = False
                break
            if idx > 0:
                sizes.append(idx)
        if ok:
            yield sign, tuple(sizes)


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i):
            if perm[j] > perm[i]:
                sign = -sign
    return sign


def lr_coeffs_tableau(lam, mu, max_rows: int) -> dict[Partition, int]:
    """c^nu_{lam,mu} by direct enumeration of lattice skew tableaux.

    Counts semistandard fillings of nu/lam with content mu whose reverse
    reading word is a lattice word.  Exponential; intended for small inputs
    and for cross-checking the Pieri route.
    """
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    total = weight(lam) + weight(mu)
    max_part = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    out: dict[Partition, int] = {}
    for nu in _partitions_of(total, max_rows, max_part):
        if len(nu) > max_rows or not _contains(nu, lam):
            continue
        count = _count_lattice_fillings(nu, lam, mu)
        if count:
            out[nu] = count
    return out


def _partitions_of(n: int, max_rows: int, max_part: int):
    def grow(remaining: int, maximum: int, prefix: list[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        if len(prefix) == max_rows:
            return
        for part in range(min(maximum, remaining), 0, -1):
            yield from grow(remaining - part, part, prefix + [part])

    yield from grow(n, max_part, [])


def _contains(nu: Partition, lam: Partition) -> bool:
    return len(nu) >= len(lam) and all(nu[i] >= lam[i] for i in range(len(lam)))


def _count_lattice_fillings(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Fillings of nu/lam, content mu, rows weakly and columns strictly
    increasing, lattice reading word (right-to-left, top-to-bottom)."""
    rows = len(nu)
    lam_pad = list(lam) + [0] * (rows - len(lam))
    # cells in reading order: rows top to bottom, each row right to left,
    # so the right and upper neighbours are already filled when we place
    cells = [(i, j) for i in range(rows) for j in range(lam_pad[i], nu[i])]
    cells.sort(key=lambda c: (c[0], -c[1]))
    nvals = len(mu)
    grid: dict[tuple[int, int], int] = {}
    remaining = list(mu)
    counts = [0] * (nvals + 1)

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(1, nvals + 1):
            if remaining[v - 1] == 0:
                continue
            # lattice prefix condition: #v never exceeds #(v-1)
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            # row weakly increasing against the right neighbour
            if j + 1 < nu[i] and v > grid[(i, j + 1)]:
                continue
            # column strictly increasing against the skew cell above
            if i > 0 and j >= lam_pad[i - 1] and grid[(i - 1, j)] >= v:
                continue
            grid[(i, j)] = v
            counts[v] += 1
            remaining[v - 1] -= 1
            total += place(idx + 1)
            remaining[v - 1] += 1
            counts[v] -= 1
            del grid[(i, j)]
        return total

    return place(0)


# ---------------------------------------------------------------------------
# degeneracy-locus coefficients d(lambda)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegCoefficient:
    """Degree d(lambda) of a kernel degeneracy locus in P^{mn-1}."""

    value: int
    context: tuple[int, int]


def _series_coeff(p: int, q: int) -> int:
    """Coefficient of H^p in (1-H)^{-q}; q may be nonpositive."""
    if p < 0:
        return 0
    if p == 0:
        return 1
    # generalized binomial(q+p-1, p)
    num = 1
    for i in range(p):
        num *= q + p - 1 - i
    return num // factorial(p)


def _int_det(matrix: list[list[int]]) -> int:
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for col in range(n):
        entry = matrix[0][col]
        if entry == 0:
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        total += (-1) ** col * entry * _int_det(minor)
    return total


def dlambda(lam, m: int, n: int) -> DegCoefficient:
    """Degree of the locus of [A] in P(Hom(C^m, C^n)) whose kernel meets the
    standard flag per lambda; the pullback of the Schubert class sigma_lambda
    under the kernel map is d(lambda) * H^{|lambda|}.

    For a one-row lambda = (k) this reduces to the coefficient of H^k in
    1/(1-H)^{n-k+1}, i.e. binomial(n, k).
    """
    if not (0 < n < m):
        raise ParameterError(f"need 0 < n < m, got m={m}, n={n}")
    lam = normalize_partition(lam)
    if not fits_in_box(lam, m - n, n):
        # the locus is empty once the kernel conditions are overdetermined
        return DegCoefficient(0, (m, n))
    ell = len(lam)
    # entry (i, j), 1-based: [H^{lam_i + j - i}] of the row series (1-H)^{-(n+i-lam_i)}
    matrix = [
        [_series_coeff(lam[i] + (j + 1) - (i + 1), n + (i + 1) - lam[i]) for j in range(ell)]
        for i in range(ell)
    ]
    value = _int_det(matrix)
    if value < 0:
        raise InternalCheckError(f"negative degeneracy degree for {lam}, m={m}, n={n}")
    return DegCoefficient(value, (m, n))


# ---------------------------------------------------------------------------
# quantum product on Gr(k, m) via rim-hook reduction
# ---------------------------------------------------------------------------

def _rim_hook_reduce(nu: Partition, k: int, m: int):
    """Reduce nu (at most k rows) into the k x (m-k) box by removing m-rim
    hooks on the beta-set; returns (partition, degree, sign) or None when no
    full reduction exists.

    Removing the hook at beta value b replaces b by b-m; its height is one
    more than the number of beta values strictly between b-m and b, and each
    removal contributes the sign (-1)^(k - height).
    """
    cols = m - k
    if len(nu) > k:
        return None
    beta = sorted((nu[i] if i < len(nu) else 0) + (k - 1 - i) for i in range(k))
    degree = 0
    sign = 1
    while True:
        lam = _beta_to_partition(beta, k)
        if fits_in_box(lam, k, cols):
            return lam, degree, sign
        removable = [b for b in beta if b - m >= 0 and (b - m) not in beta]
        if not removable:
            return None
        b = removable[-1]
        height = sum(1 for x in beta if b - m < x < b) + 1
        sign *= (-1) ** (k - height)
        beta.remove(b)
        beta.append(b - m)
        beta.sort()
        degree += 1


def _beta_to_partition(beta: list[int], k: int) -> Partition:
    desc = sorted(beta, reverse=True)
    return normalize_partition(desc[i] - (k - 1 - i) for i in range(k))


def quantum_lr(k: int, m: int, lam, mu) -> dict[tuple[Partition, int], int]:
    """Quantum Littlewood-Richardson coefficients of Gr(k, m).

    Returns the expansion sigma_lam * sigma_mu = sum c^{nu,d} q^d sigma_nu as
    a map (nu, d) -> c.  Classical coefficients with at most k rows are
    reduced by removing m-rim hooks until the shape fits the k x (m-k) box;
    shapes admitting no full reduction contribute nothing.  Degrees satisfy
    |lam| + |mu| = |nu| + m*d.
    """
    if not (0 < k < m):
        raise ParameterError(f"need 0 < k < m, got k={k}, m={m}")
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    cols = m - k
    if not fits_in_box(lam, k, cols) or not fits_in_box(mu, k, cols):
        raise ParameterError("classes must fit in the k x (m-k) box")
    out: dict[tuple[Partition, int], int] = {}
    for nu, coeff in lr_coeffs(lam, mu, max_rows=k).items():
        reduced = _rim_hook_reduce(nu, k, m)
        if reduced is None:
            continue
        shape, degree, sign = reduced
        key = (shape, degree)
        out[key] = out.get(key, 0) + sign * coeff
    out = {key: c for key, c in out.items() if c}
    if any(c < 0 for c in out.values()):
        raise InternalCheckError(f"negative quantum LR coefficient in Gr({k},{m})")
    return out


def quantum_3point(k: int, m: int, lam, mu, nu, d: int) -> int:
    """Genus-0 3-point invariant <sigma_lam, sigma_mu, sigma_nu>_d on Gr(k,m).

    Zero unless |lam| + |mu| + |nu| = k(m-k) + m*d; symmetric in the three
    classes.
    """
    if d < 0:
        raise ParameterError("degree must be nonnegative")
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    nu = normalize_partition(nu)
    if weight(lam) + weight(mu) + weight(nu) != k * (m - k) + m * d:
        return 0
    product = quantum_lr(k, m, lam, mu)
    return product.get((complement(nu, k, m - k), d), 0)


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
