"""Exact integer matrix kernels: extended gcd, row echelon and Hermite
forms, Smith normal form with tracked column transforms, and left kernels.
Everything runs on arbitrary-precision Python ints; no floating point.
"""

from bisect import bisect_left


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with g = gcd(a, b) = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _first_nonzero(v, start=0):
    for j in range(start, len(v)):
        if v[j]:
            return j
    return -1


def _nearest_div(b: int, a: int) -> int:
    """Quotient q minimizing |b - q*a| (a != 0)."""
    q, r = divmod(b, a)
    if 2 * abs(r) > abs(a):
        q += 1
    return q


def _tail_reduce(rows, pivots, v, pos) -> None:
    """Shrink v in place against the echelon rows from pos on; preserves
    the joint span, keeps freshly built rows from carrying big entries."""
    for k in range(pos, len(rows)):
        c = pivots[k]
        if v[c]:
            r = rows[k]
            m = _nearest_div(v[c], r[c])
            if m:
                for j in range(c, len(v)):
                    if r[j]:
                        v[j] -= m * r[j]


def echelon_insert(rows: list[list[int]], pivots: list[int], vec) -> None:
    """Reduce vec against an echelon basis in place, extending it if needed.

    rows are kept sorted by pivot column; the span of rows is unchanged
    except possibly growing by vec.  Leading entries are combined by
    Euclidean division-with-swap: unlike a one-shot Bezout combination
    this never scales a row by a large factor, so entries stay near the
    size of the inputs across thousands of insertions.
    """
    v = list(vec)
    c = _first_nonzero(v)
    while c >= 0:
        pos = bisect_left(pivots, c)
        if pos == len(pivots) or pivots[pos] != c:
            if v[c] < 0:
                v = [-x for x in v]
            _tail_reduce(rows, pivots, v, pos)
            rows.insert(pos, v)
            pivots.insert(pos, c)
            return
        r = rows[pos]
        swapped = False
        while v[c]:
            m = _nearest_div(v[c], r[c])
            if m:
                for j in range(c, len(v)):
                    if r[j]:
                        v[j] -= m * r[j]
            if v[c]:
                rows[pos], v = v, rows[pos]
                r = rows[pos]
                swapped = True
        if swapped:
            _tail_reduce(rows, pivots, rows[pos], pos + 1)
        c = _first_nonzero(v, c + 1)


def echelon(vectors, width: int) -> tuple[list[list[int]], list[int]]:
    rows: list[list[int]] = []
    pivots: list[int] = []
    for vec in vectors:
        if len(vec) != width:
            raise ValueError(f"row width {len(vec)} != {width}")
        echelon_insert(rows, pivots, vec)
    return rows, pivots


def rank_of(vectors, width: int) -> int:
    return len(echelon(vectors, width)[0])


def hnf(vectors, width: int) -> tuple[list[list[int]], list[int]]:
    """Canonical row-style Hermite form: positive pivots, entries above a
    pivot reduced into [0, pivot).  Unique per row span, so the output is
    independent of generator order."""
    rows, pivots = echelon(vectors, width)
    for i, c in enumerate(pivots):
        if rows[i][c] < 0:
            rows[i] = [-x for x in rows[i]]
    for i in range(len(rows)):
        for below in range(i + 1, len(rows)):
            c = pivots[below]
            pv = rows[below][c]
            f = rows[i][c] // pv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[below])]
    return rows, pivots


def reduce_mod_rows(rows, pivots, vec) -> list[int]:
    """Residue of vec after eliminating along the echelon rows (exact
    divisions only); the residue is zero iff vec lies in the row span."""
    v = list(vec)
    for r, c in zip(rows, pivots):
        if v[c] and v[c] % r[c] == 0:
            m = v[c] // r[c]
            for j in range(c, len(v)):
                if r[j]:
                    v[j] -= m * r[j]
    return v


def solve_in_span(rows, pivots, vec):
    """Coefficients expressing vec over the echelon rows, or None."""
    v = list(vec)
    coeffs = [0] * len(rows)
    for i, (r, c) in enumerate(zip(rows, pivots)):
        if v[c]:
            if v[c] % r[c]:
                return None
            m = v[c] // r[c]
            coeffs[i] = m
            for j in range(c, len(v)):
                if r[j]:
                    v[j] -= m * r[j]
    if any(v):
        return None
    return coeffs


def left_kernel(rows, width: int) -> list[list[int]]:
    """Basis of {y : y * A = 0} for A given by rows."""
    m = len(rows)
    aug = [list(r) + [int(i == j) for j in range(m)] for i, r in enumerate(rows)]
    erows, epivots = echelon(aug, width + m)
    return [r[width:] for r, c in zip(erows, epivots) if c >= width]


def smith_normal_form(mat, width: int):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (divisors, V, Vinv) where divisors is the full diagonal
    (nonnegative, each dividing the next among the nonzero ones) and V,
    Vinv are the accumulated column transform and its inverse: for the
    input A there is a unimodular U with U*A*V = diag(divisors), hence a
    row vector x lies in the row span of A iff (x*V)[t] is divisible by
    divisors[t] for every t (zero divisors demand zero entries).
    """
    W = [list(row) for row in mat]
    R, C = len(W), width
    for row in W:
        if len(row) != C:
            raise ValueError("ragged matrix")
    V = identity(C)
    Vinv = identity(C)

    def col_swap(a, b):
        for row in W:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]
        Vinv[a], Vinv[b] = Vinv[b], Vinv[a]

    def col_add(src, dst, k):
        for row in W:
            if row[src]:
                row[dst] += k * row[src]
        for row in V:
            if row[src]:
                row[dst] += k * row[src]
        Vinv[src] = [x - k * y for x, y in zip(Vinv[src], Vinv[dst])]

    def col_neg(a):
        for row in W:
            row[a] = -row[a]
        for row in V:
            row[a] = -row[a]
        Vinv[a] = [-x for x in Vinv[a]]

    t = 0
    bound = min(R, C)
    while t < bound:
        best = None
        for i in range(t, R):
            wr = W[i]
            for j in range(t, C):
                w = wr[j]
                if w and (best is None or abs(w) < best[0]):
                    best = (abs(w), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            W[t], W[bi] = W[bi], W[t]
        if bj != t:
            col_swap(t, bj)
        while True:
            restart = False
            for i in range(t + 1, R):
                if W[i][t]:
                    q, rm = divmod(W[i][t], W[t][t])
                    if q:
                        W[i] = [x - q * y for x, y in zip(W[i], W[t])]
                    if rm:
                        W[t], W[i] = W[i], W[t]
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, C):
                if W[t][j]:
                    q, rm = divmod(W[t][j], W[t][t])
                    if q:
                        col_add(t, j, -q)
                    if rm:
                        col_swap(t, j)
                        restart = True
                        break
            if restart:
                continue
            stray = None
            for i in range(t + 1, R):
                wr = W[i]
                for j in range(t + 1, C):
                    if wr[j] % W[t][t]:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            W[t] = [x + y for x, y in zip(W[t], W[stray])]
        if W[t][t] < 0:
            col_neg(t)
        t += 1
    divisors = [W[i][i] if i < R else 0 for i in range(bound)]
    return divisors, V, Vinv
