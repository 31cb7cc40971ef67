"""Exhaustive search for the holomorphic weight-2 eta quotients of a level.

An exponent vector r over the divisors of N is admitted when

  * sum r_delta = 4                      (weight 2),
  * every cusp order is >= 0            (holomorphy),
  * sum delta r_delta = 0 (mod 24) and
    sum (N/delta) r_delta = 0 (mod 24)  (transformation congruences),

and its character label is read off the squarefree kernel of
prod delta^(r_delta).

The cusp-order inequalities have strictly positive coefficients and an
invertible coefficient matrix, so together with the weight equation they
cut out a bounded polytope with at most one vertex per dropped inequality;
the vertex coordinates give exact integer search bounds, and each order row
is bounded above by its value at the opposite vertex.  The search assigns
exponents one divisor at a time (largest first) inside those bounds,
pruning each candidate against per-row reachability tables indexed by the
remaining weight; the last two exponents are not searched at all but read
off by intersecting the surviving row intervals with the arithmetic
progression that the two congruences force.  Every emitted vector is then
re-checked against the full constraint set.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd

from .arith import divisors
from .errors import NotInSpace
from .eta import EtaQuotient, squarefree_kernel
from .spaces import eisenstein_cusp_split, solve_in_basis

SAFETY_BOX = 64

_KERNEL_TO_LABEL = {1: 1, 2: 8, 3: 12, 6: 24}


def _solve_square(matrix, rhs):
    n = len(matrix)
    rows = [list(map(Fraction, matrix[i])) + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if rows[i][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[col])]
    return [rows[i][n] for i in range(n)]


def _polytope_bounds(divs, level, weight_sum):
    """Exact bounds for {M r >= 0, sum r = weight_sum} with M[c][d] = gcd(c,d)^2/d.

    Returns per-coordinate integer bounds for r and, per row c, the maximum
    of the integer-scaled row level * (M r)_c over the polytope (the row
    minimum is 0 by the constraints themselves).
    """
    n = len(divs)
    matrix = [[Fraction(gcd(c, d) ** 2, d) for d in divs] for c in divs]
    vertices = []
    row_max = []
    for i in range(n):
        rhs = [Fraction(1) if j == i else Fraction(0) for j in range(n)]
        column = _solve_square(matrix, rhs)
        total = sum(column)
        assert total > 0, "cusp-order cone is not pointed against the weight plane"
        scale = Fraction(weight_sum) / total
        vertices.append([scale * v for v in column])
        # (M r)_i is maximal at this vertex, where it equals the scale factor
        row_max.append(floor(level * scale))
    lo = [min(v[j] for v in vertices) for j in range(n)]
    hi = [max(v[j] for v in vertices) for j in range(n)]
    assert all(-SAFETY_BOX < b for b in lo) and all(b < SAFETY_BOX for b in hi), (
        "vertex bounds escape the safety box; widen SAFETY_BOX"
    )
    lo = [max(ceil(b), -SAFETY_BOX) for b in lo]
    hi = [min(floor(b), SAFETY_BOX) for b in hi]
    return lo, hi, row_max


def _egcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - y * (a // b)


def _linear_congruence(coeff, rhs, mod):
    """Solutions of coeff*y = rhs (mod mod) as (residue, modulus), or None."""
    coeff %= mod
    rhs %= mod
    if coeff == 0:
        return (0, 1) if rhs == 0 else None
    g, inv, _ = _egcd(coeff, mod)
    if rhs % g:
        return None
    m = mod // g
    return ((rhs // g) * (inv % mod) % m, m)


def _intersect_progressions(p1, p2):
    """Intersection of y = a1 (mod m1) and y = a2 (mod m2), or None."""
    a1, m1 = p1
    a2, m2 = p2
    g, x, _ = _egcd(m1, m2)
    if (a2 - a1) % g:
        return None
    lcm = m1 // g * m2
    step = (a2 - a1) // g * x % (m2 // g)
    return ((a1 + m1 * step) % lcm, lcm)


def _prime_factor_parity(d, primes):
    row = []
    for p in primes:
        e = 0
        while d % p == 0:
            d //= p
            e += 1
        row.append(e % 2)
    return row


def _small_primes_dividing(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _search_level(level, weight_sum=4):
    """All admissible exponent vectors, as (vector, character label) pairs."""
    divs = tuple(divisors(level))
    n = len(divs)
    lo_d, hi_d, row_max = _polytope_bounds(divs, level, weight_sum)

    # assign large divisors first; their cusp-order contributions dominate,
    # so the row bounds bite early, and the congruence sum (N/delta) r_delta
    # builds up its small coefficients last, which makes the suffix-gcd
    # pruning below available from the middle of the tree onwards
    order = sorted(range(n), key=lambda j: divs[j], reverse=True)
    dv = [divs[j] for j in order]
    lo = [lo_d[j] for j in order]
    hi = [hi_d[j] for j in order]
    # scaled cusp-order rows: integer coefficients level*gcd(c,d)^2/d
    coef = [[level * gcd(c, d) ** 2 // d for d in dv] for c in divs]
    s1c = [d for d in dv]  # sum d*r = 0 (mod 24)
    s2c = [level // d for d in dv]  # sum (N/d)*r = 0 (mod 24)

    # reachable weight window per suffix
    wmin = [0] * (n + 1)
    wmax = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        wmin[j] = wmin[j + 1] + lo[j]
        wmax[j] = wmax[j + 1] + hi[j]

    # reachability tables: for suffix j and remaining weight w, the exact
    # min/max of sum_{k>=j} coef[c][k] r_k over box-bounded integer vectors
    # with sum r_k = w.  These couple the weight equation into every row
    # bound, which is what makes the pruning sharp.
    r_max = [[None] * n for _ in range(n + 1)]
    r_min = [[None] * n for _ in range(n + 1)]
    for c in range(n):
        r_max[n][c] = [0]
        r_min[n][c] = [0]
    for j in range(n - 1, -1, -1):
        width = wmax[j] - wmin[j] + 1
        for c in range(n):
            cm = coef[c][j]
            nxt_max, nxt_min = r_max[j + 1][c], r_min[j + 1][c]
            cur_max = [None] * width
            cur_min = [None] * width
            for w in range(wmin[j], wmax[j] + 1):
                best_hi = None
                best_lo = None
                r0 = max(lo[j], w - wmax[j + 1])
                r1 = min(hi[j], w - wmin[j + 1])
                for r in range(r0, r1 + 1):
                    idx = w - r - wmin[j + 1]
                    v_hi = cm * r + nxt_max[idx]
                    v_lo = cm * r + nxt_min[idx]
                    if best_hi is None or v_hi > best_hi:
                        best_hi = v_hi
                    if best_lo is None or v_lo < best_lo:
                        best_lo = v_lo
                cur_max[w - wmin[j]] = best_hi
                cur_min[w - wmin[j]] = best_lo
            r_max[j][c] = cur_max
            r_min[j][c] = cur_min

    # Suffix congruence subgroups: once the exponents of dv[0..j] are fixed,
    # the remaining variables can only move each congruence sum within the
    # subgroup of Z/24 generated by their coefficients (every box spans at
    # least 24 consecutive integers, so each generator contributes fully);
    # a viable partial sum must therefore already vanish modulo that gcd.
    # On top of this, the two conditions restrict the exponent being chosen
    # to an arithmetic progression, precomputed here as
    # (coefficient gcd, progression modulus, inverse) per depth.
    def _suffix_gcds(coefs):
        g = [24] * (n + 1)
        for j in range(n - 1, -1, -1):
            width_ok = hi[j] - lo[j] + 1 >= 24
            g[j] = gcd(g[j + 1], coefs[j]) if width_ok else 1
        return g

    g1 = _suffix_gcds(s1c)
    g2 = _suffix_gcds(s2c)

    def _progression_data(coefs, g):
        # viability of r at depth j: coefs[j]*r = -partial (mod g[j+1]),
        # i.e. r = inv * (-partial/gc) (mod m) provided gc divides partial
        data = []
        for j in range(n):
            modulus = g[j + 1]
            gc = gcd(coefs[j], modulus)
            m = modulus // gc
            inv = pow(coefs[j] // gc, -1, m) if m > 1 else 0
            data.append((gc, m, inv))
        return data

    p1 = _progression_data(s1c, g1)
    p2 = _progression_data(s2c, g2)
    # the two progression moduli are fixed per depth, so the CRT merge is a
    # finite table (residue1, residue2) -> (combined residue, combined step)
    crt_table = []
    for j in range(n):
        m1, m2 = p1[j][1], p2[j][1]
        table = {}
        for a in range(m1):
            for b in range(m2):
                table[a * m2 + b] = _intersect_progressions((a, m1), (b, m2))
        crt_table.append((m2, table))

    primes = _small_primes_dividing(level)
    parity = [_prime_factor_parity(d, primes) for d in dv]

    accepted = []
    partial = [0] * n
    vector = [0] * n
    yi, zi = n - 2, n - 1
    all_rows = range(n)

    def admit(y, z):
        vector[yi], vector[zi] = y, z
        r_by_div = [0] * n
        for j, r in zip(order, vector):
            r_by_div[j] = r
        # paranoid re-check of every constraint on the emitted vector
        assert sum(vector) == weight_sum
        for c in all_rows:
            value = partial[c] + coef[c][yi] * y + coef[c][zi] * z
            assert 0 <= value <= row_max[c], (r_by_div, c, value)
        s1 = sum(d * r for d, r in zip(divs, r_by_div))
        s2 = sum((level // d) * r for d, r in zip(divs, r_by_div))
        assert s1 % 24 == 0 and s2 % 24 == 0
        assert all(abs(r) < SAFETY_BOX for r in r_by_div), r_by_div
        kernel = 1
        for i, p in enumerate(primes):
            if sum(parity[j][i] * vector[j] for j in range(n)) % 2:
                kernel *= p
        accepted.append((tuple(r_by_div), _KERNEL_TO_LABEL.get(kernel)))

    def tail(wl, s1p, s2p):
        # two free exponents y, z with y + z = wl: every row becomes a
        # two-sided interval in y, and the two congruences become an
        # arithmetic progression
        y_lo = max(lo[yi], wl - hi[zi])
        y_hi = min(hi[yi], wl - lo[zi])
        if y_hi < y_lo:
            return
        for c in all_rows:
            cy, cz = coef[c][yi], coef[c][zi]
            const = partial[c] + cz * wl
            diff = cy - cz
            if diff > 0:
                y_lo = max(y_lo, -(const // diff))
                y_hi = min(y_hi, (row_max[c] - const) // diff)
            elif diff < 0:
                y_hi = min(y_hi, const // -diff)
                y_lo = max(y_lo, -((row_max[c] - const) // -diff))
            elif not 0 <= const <= row_max[c]:
                return
            if y_hi < y_lo:
                return
        prog1 = _linear_congruence(s1c[yi] - s1c[zi], -s1p - s1c[zi] * wl, 24)
        if prog1 is None:
            return
        prog2 = _linear_congruence(s2c[yi] - s2c[zi], -s2p - s2c[zi] * wl, 24)
        if prog2 is None:
            return
        prog = _intersect_progressions(prog1, prog2)
        if prog is None:
            return
        residue, step = prog
        y = y_lo + (residue - y_lo) % step
        while y <= y_hi:
            admit(y, wl - y)
            y += step

    coef_col = [[coef[c][j] for c in all_rows] for j in range(n)]

    def descend(j, wl, s1p, s2p):
        nxt = j + 1
        low = max(lo[j], wl - wmax[nxt])
        high = min(hi[j], wl - wmin[nxt])
        if high < low:
            return
        # restrict r to the progression forced by the two congruences
        gc1, m1, inv1 = p1[j]
        if s1p % gc1:
            return
        res1 = (-(s1p // gc1) * inv1) % m1
        gc2, m2, inv2 = p2[j]
        if s2p % gc2:
            return
        res2 = (-(s2p // gc2) * inv2) % m2
        m2_width, table = crt_table[j]
        prog = table[res1 * m2_width + res2]
        if prog is None:
            return
        residue, step = prog
        rmx, rmn = r_max[nxt], r_min[nxt]
        base = wmin[nxt]
        col = coef_col[j]
        d1, d2 = s1c[j], s2c[j]
        is_tail = nxt == n - 2
        r = low + (residue - low) % step
        while r <= high:
            idx = wl - r - base
            for c in all_rows:
                v = partial[c] + col[c] * r
                if v + rmx[c][idx] < 0 or v + rmn[c][idx] > row_max[c]:
                    break
            else:
                for c in all_rows:
                    partial[c] += col[c] * r
                vector[j] = r
                if is_tail:
                    tail(wl - r, s1p + d1 * r, s2p + d2 * r)
                else:
                    descend(nxt, wl - r, s1p + d1 * r, s2p + d2 * r)
                for c in all_rows:
                    partial[c] -= col[c] * r
            r += step

    if n == 2:
        tail(weight_sum, 0, 0)
    else:
        descend(0, weight_sum, 0, 0)
    accepted.sort()
    return tuple(accepted)


def enumerate_eta_quotients(character, level=24):
    """All eta quotients in M_2(Gamma0(level), chi_character), lexicographic."""
    divs = tuple(divisors(level))
    return [
        EtaQuotient(dict(zip(divs, vec)), level=level)
        for vec, label in _search_level(level)
        if label == character
    ]


def classify_eisenstein(quotients, character, verify_to=60):
    """Split enumerated quotients by whether their cuspidal part vanishes."""
    eisenstein, cuspidal = [], []
    for f in quotients:
        try:
            _, cusp_part = eisenstein_cusp_split(f.series(verify_to + 2), character, verify_to)
        except NotInSpace as exc:  # enumerated quotients must lie in the space
            raise AssertionError(f"enumerated quotient {f} not in its space") from exc
        if all(v == 0 for v in cusp_part.values()):
            eisenstein.append(f)
        else:
            cuspidal.append(f)
    return eisenstein, cuspidal


def derive_expansion_table(character, verify_to=60, level=24):
    """(quotient, solve result) for every Eisenstein eta quotient of the space."""
    quotients = enumerate_eta_quotients(character, level=level)
    eisenstein, _ = classify_eisenstein(quotients, character, verify_to)
    return [
        (f, solve_in_basis(f.series(verify_to + 2), character, verify_to))
        for f in eisenstein
    ]


def level12_originating_vectors():
    """Level-24 chi_12 vectors arising from level-12 quotients g(z) or g(2z).

    S_2(Gamma1(12)) = 0, so every holomorphic weight-2 level-12 eta quotient
    is Eisenstein, and dilating by 1 or 2 lands it in E_2(Gamma0(24), chi_12).
    """
    divs12 = tuple(divisors(12))
    divs24 = tuple(divisors(24))
    vectors = set()
    for vec, label in _search_level(12):
        if label != 12:
            continue
        exponents = dict(zip(divs12, vec))
        direct = tuple(exponents.get(d, 0) for d in divs24)
        dilated = tuple(exponents.get(d // 2, 0) if d % 2 == 0 else 0 for d in divs24)
        vectors.add(direct)
        vectors.add(dilated)
    return vectors
