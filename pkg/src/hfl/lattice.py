"""Sublattices of the root lattice A_{n-1} = {x in Z^n : sum(x) = 0}.

A lattice is stored through the Hermite form of its projection that drops
coordinate 0 (the projection is injective on sum-zero vectors), which
makes bases canonical and membership a back-substitution.  On top of that
sit the quotient group A_{n-1}/L via Smith form, exact determinants,
censuses of short vectors, an exact sphere enumerator for small ranks,
and a search for coordinate-permutation automorphisms.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb

from . import intmat
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    EmptyGeneratorSetError,
    NotFullRankError,
    SearchInfeasibleError,
)

DEFAULT_CENSUS_CAP = 10**8
ENUM_MAX_RANK = 12
PERM_EXHAUSTIVE_MAX = 8
PERM_SEARCH_MAX = 28


@dataclass(frozen=True)
class QuotientStructure:
    """Elementary divisor chain of A_{n-1}/L for a full-rank L."""

    divisors: tuple[int, ...]

    @property
    def nontrivial(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d != 1)

    @property
    def index(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out


def permute(vec, perm):
    """Move the value at coordinate i to coordinate perm[i]."""
    out = [0] * len(vec)
    for i, x in enumerate(vec):
        out[perm[i]] = x
    return tuple(out)


class Lattice:
    """Sublattice of A_{n-1} with a canonical (Hermite) basis."""

    def __init__(self, n: int, hnf_rows, pivots):
        self.n = n
        self._hnf = [list(r) for r in hnf_rows]
        self._pivots = list(pivots)
        self.rank = len(self._hnf)
        self.rows = tuple(tuple([-sum(r)] + list(r)) for r in self._hnf)
        self._classmap = None

    @classmethod
    def from_generators(cls, vectors, n: int) -> "Lattice":
        vectors = list(vectors)
        if not vectors:
            raise EmptyGeneratorSetError("need at least one generator")
        for v in vectors:
            if len(v) != n:
                raise DimensionMismatchError(f"generator length {len(v)} != n = {n}")
            if sum(v) != 0:
                raise ValueError(f"generator does not sum to zero: {v}")
        rows, pivots = intmat.hnf([list(v[1:]) for v in vectors], n - 1)
        return cls(n, rows, pivots)

    def contains(self, v) -> bool:
        if len(v) != self.n:
            raise DimensionMismatchError(f"vector length {len(v)} != n = {self.n}")
        if sum(v) != 0:
            return False
        residue = intmat.reduce_mod_rows(self._hnf, self._pivots, list(v[1:]))
        return not any(residue)

    def is_full_rank(self) -> bool:
        return self.rank == self.n - 1

    def index_in_ambient(self) -> int:
        """[A_{n-1} : L]; requires full rank."""
        if not self.is_full_rank():
            raise NotFullRankError(f"rank {self.rank} < {self.n - 1}")
        out = 1
        for r, c in zip(self._hnf, self._pivots):
            out *= r[c]
        return out

    def quotient(self) -> QuotientStructure:
        """Elementary divisors of A_{n-1}/L (ascending chain, 1s included)."""
        if not self.is_full_rank():
            raise NotFullRankError(f"rank {self.rank} < {self.n - 1}")
        divisors, _, _ = self._snf()
        return QuotientStructure(tuple(divisors))

    def determinant(self) -> tuple[int, int]:
        """det L as (index, radicand): the exact value is index * sqrt(radicand)."""
        return self.index_in_ambient(), self.n

    def _snf(self):
        if self._classmap is None:
            divisors, V, Vinv = intmat.smith_normal_form(self._hnf, self.n - 1)
            cols = [t for t, d in enumerate(divisors) if d != 1]
            mods = tuple(divisors[t] for t in cols)
            cls = [tuple([0] * len(cols))]
            for i in range(self.n - 1):
                vrow = V[i]
                cls.append(tuple(vrow[c] % m for c, m in zip(cols, mods)))
            self._classmap = (divisors, mods, tuple(cls), cols, Vinv)
        return self._classmap[0], self._classmap[1], self._classmap[2]

    def class_map(self):
        """(mods, cls): v in L iff sum(v[i]*cls[i]) == 0 mod mods, componentwise.

        cls[i] is the image of e_i - e_0 in the nontrivial part of the
        quotient group; only valid for full-rank lattices.
        """
        if not self.is_full_rank():
            raise NotFullRankError(f"rank {self.rank} < {self.n - 1}")
        _, mods, cls = self._snf()
        return mods, cls

    def member_fast(self, v) -> bool:
        """Membership through the quotient map; agrees with contains()."""
        mods, cls = self.class_map()
        m = len(mods)
        if m == 0:
            return sum(v) == 0
        acc = [0] * m
        for i, x in enumerate(v):
            if x:
                ci = cls[i]
                for t in range(m):
                    acc[t] += x * ci[t]
        return sum(v) == 0 and all(a % md == 0 for a, md in zip(acc, mods))

    def quotient_generators(self):
        """Divisor vectors mapping to the unit classes of the quotient."""
        self._snf()
        _, mods, _, cols, Vinv = self._classmap
        gens = []
        for c in cols:
            x = list(Vinv[c])
            gens.append(tuple([-sum(x)] + x))
        return mods, gens

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Lattice(n={self.n}, rank={self.rank})"


def lattice_from_generators(vectors, n: int) -> Lattice:
    return Lattice.from_generators(vectors, n)


# -- censuses of short vectors -------------------------------------------------


def _census_signatures(cls, mods, subsets):
    out = []
    m = len(mods)
    for sub in subsets:
        acc = [0] * m
        for i in sub:
            ci = cls[i]
            for t in range(m):
                acc[t] += ci[t]
        out.append(tuple(a % md for a, md in zip(acc, mods)))
    return out


def _census_sig_chunk(args):
    cls, mods, subsets = args
    return _census_signatures(cls, mods, subsets)


def census_pm1(L: Lattice, q: int, cap: int | None = None, workers: int = 1):
    """All lattice vectors with exactly q entries +1, q entries -1.

    The support space (q-subsets for the +1s, then for the -1s) is walked
    in lexicographic order, partitioned contiguously across workers, and
    merged by a final sort, so the result is independent of the worker
    count.  Membership is decided by the quotient class map when the
    lattice has full rank, and by direct reduction otherwise.
    """
    n = L.n
    cap = DEFAULT_CENSUS_CAP if cap is None else cap
    total = comb(n, q) * comb(n - q, q)
    if total > cap:
        raise BudgetExceededError(f"census needs {total} support pairs > cap {cap}")
    if not L.is_full_rank():
        out = []
        for pos in itertools.combinations(range(n), q):
            rest = [i for i in range(n) if i not in pos]
            for negs in itertools.combinations(rest, q):
                v = [0] * n
                for i in pos:
                    v[i] = 1
                for i in negs:
                    v[i] = -1
                if L.contains(tuple(v)):
                    out.append(tuple(v))
        out.sort()
        return out

    mods, cls = L.class_map()
    subsets = list(itertools.combinations(range(n), q))
    chunks = _split_chunks(subsets, workers)
    if workers > 1 and len(subsets) > 4 * workers:
        payload = [(cls, mods, chunk) for chunk in chunks]
        try:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                sig_parts = list(pool.map(_census_sig_chunk, payload))
        except OSError:
            sig_parts = [_census_signatures(cls, mods, chunk) for chunk in chunks]
    else:
        sig_parts = [_census_signatures(cls, mods, chunk) for chunk in chunks]
    sigs = [s for part in sig_parts for s in part]

    buckets: dict[tuple, list[int]] = {}
    for idx, sig in enumerate(sigs):
        buckets.setdefault(sig, []).append(idx)
    out = []
    for idxs in buckets.values():
        for ia in idxs:
            a = subsets[ia]
            aset = set(a)
            for ib in idxs:
                if ia == ib:
                    continue
                b = subsets[ib]
                if aset.isdisjoint(b):
                    v = [0] * n
                    for i in a:
                        v[i] = 1
                    for i in b:
                        v[i] = -1
                    out.append(tuple(v))
    out.sort()
    return out


def _split_chunks(items, workers):
    workers = max(1, workers)
    k = len(items)
    size = (k + workers - 1) // workers if k else 1
    return [items[i : i + size] for i in range(0, k, size)] or [[]]


def _partitions(s: int, max_part: int | None = None):
    """Non-increasing tuples of positive ints summing to s."""
    if max_part is None:
        max_part = s
    if s == 0:
        yield ()
        return
    for first in range(min(s, max_part), 0, -1):
        for rest in _partitions(s - first, first):
            yield (first,) + rest


def _shape_pairs(bound: int):
    """All (positive parts, negative parts) with equal sums and total
    squared weight <= bound, excluding the zero vector."""
    pairs = []
    for s in range(1, bound // 2 + 1):
        for pos in _partitions(s):
            wpos = sum(x * x for x in pos)
            if wpos > bound:
                continue
            for neg in _partitions(s):
                w = wpos + sum(x * x for x in neg)
                if w <= bound:
                    pairs.append((pos, neg, w))
    pairs.sort(key=lambda p: (p[2], p[0], p[1]))
    return pairs


def _assign_shape(L: Lattice, values_counts, cap: int):
    """All lattice vectors whose nonzero entries realize the given
    (value, multiplicity) groups on disjoint supports."""
    n = L.n
    est = 1
    for _, m in values_counts:
        est *= comb(n, m)
    if est > cap:
        raise BudgetExceededError(f"shape scan needs about {est} placements > cap {cap}")
    full_rank = L.is_full_rank()
    out = []

    def place(gi, used, vec):
        if gi == len(values_counts):
            t = tuple(vec)
            ok = L.member_fast(t) if full_rank else L.contains(t)
            if ok:
                out.append(t)
            return
        val, m = values_counts[gi]
        free = [i for i in range(n) if i not in used]
        for sel in itertools.combinations(free, m):
            for i in sel:
                vec[i] = val
            place(gi + 1, used | set(sel), vec)
            for i in sel:
                vec[i] = 0

    place(0, frozenset(), [0] * n)
    return out


def scan_short_vectors(L: Lattice, bound: int, cap: int | None = None, workers: int = 1):
    """Every nonzero lattice vector with squared norm <= bound, sorted.

    Complete over all integer entry shapes, not only +-1 vectors, so the
    minimum it reports is exact with no structural assumptions.
    """
    cap = DEFAULT_CENSUS_CAP if cap is None else cap
    found = []
    for pos, neg, _ in _shape_pairs(bound):
        if len(pos) + len(neg) > L.n:
            continue
        if pos == neg and all(x == 1 for x in pos):
            found.extend(census_pm1(L, len(pos), cap=cap, workers=workers))
            continue
        groups = []
        for val in sorted(set(pos), reverse=True):
            groups.append((val, pos.count(val)))
        for val in sorted(set(neg), reverse=True):
            groups.append((-val, neg.count(val)))
        found.extend(_assign_shape(L, groups, cap))
    found = sorted(set(found))
    return found


def min_distance_via_scan(L: Lattice, bound: int, cap: int | None = None, workers: int = 1):
    """(min squared norm, minimal vectors) provided some vector of squared
    norm <= bound exists; exact because the scan is shape-complete."""
    vecs = scan_short_vectors(L, bound, cap=cap, workers=workers)
    if not vecs:
        raise ValueError(f"no lattice vector of squared norm <= {bound}")
    best = min(sum(x * x for x in v) for v in vecs)
    return best, [v for v in vecs if sum(x * x for x in v) == best]


# -- exact sphere enumeration for small ranks ----------------------------------


def _size_reduce(rows):
    """Greedy exact pair reduction; keeps the span, shrinks row norms."""
    rows = [list(r) for r in rows]
    changed = True
    while changed:
        changed = False
        for i in range(len(rows)):
            for j in range(len(rows)):
                if i == j:
                    continue
                num = sum(x * y for x, y in zip(rows[i], rows[j]))
                den = sum(x * x for x in rows[j])
                if den == 0:
                    continue
                k = (2 * num + den) // (2 * den)
                if k:
                    cand = [x - k * y for x, y in zip(rows[i], rows[j])]
                    if sum(x * x for x in cand) < sum(x * x for x in rows[i]):
                        rows[i] = cand
                        changed = True
    return rows


def enumerate_short_vectors(L: Lattice, bound: int):
    """All nonzero v in L with |v|^2 <= bound, by exact branch-and-bound.

    Works directly on a size-reduced basis with Fraction arithmetic for
    the Cholesky data, so results carry no rounding error.  Rank is
    capped: this is the independent low-rank oracle, not the workhorse.
    """
    r = L.rank
    if r > ENUM_MAX_RANK:
        raise SearchInfeasibleError(f"rank {r} > {ENUM_MAX_RANK} for exact enumeration")
    basis = _size_reduce([list(row) for row in L.rows])
    gram = [[sum(x * y for x, y in zip(a, b)) for b in basis] for a in basis]
    d = [Fraction(0)] * r
    mu = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        d[i] = Fraction(gram[i][i])
        for k in range(i):
            d[i] -= d[k] * mu[k][i] * mu[k][i]
        if d[i] <= 0:
            raise ValueError("basis rows are linearly dependent")
        for j in range(i + 1, r):
            s = Fraction(gram[i][j])
            for k in range(i):
                s -= d[k] * mu[k][i] * mu[k][j]
            mu[i][j] = s / d[i]

    out = []
    coeff = [0] * r
    budget = Fraction(bound)

    def descend(i, remaining):
        if i < 0:
            if any(coeff):
                v = [0] * L.n
                for t, c in enumerate(coeff):
                    if c:
                        row = basis[t]
                        for j in range(L.n):
                            v[j] += c * row[j]
                norm2 = sum(x * x for x in v)
                if 0 < norm2 <= bound:
                    out.append((norm2, tuple(v)))
            return
        center = -sum(mu[i][j] * coeff[j] for j in range(i + 1, r))
        # scan up from ceil(center) and down from ceil(center) - 1 so the
        # distance to center is monotone in each direction; seeding both
        # scans at floor(center) silently drops branches when the
        # fractional part exceeds 1/2
        up0 = ceil(center)
        t = up0
        while d[i] * (Fraction(t) - center) ** 2 <= remaining:
            coeff[i] = t
            descend(i - 1, remaining - d[i] * (Fraction(t) - center) ** 2)
            t += 1
        t = up0 - 1
        while d[i] * (Fraction(t) - center) ** 2 <= remaining:
            coeff[i] = t
            descend(i - 1, remaining - d[i] * (Fraction(t) - center) ** 2)
            t -= 1
        coeff[i] = 0

    descend(r - 1, budget)
    return sorted(set(out))


def minimal_vectors(L: Lattice):
    """All minimal vectors of L via exact enumeration (small rank only)."""
    start = min(sum(x * x for x in row) for row in _size_reduce([list(r) for r in L.rows]))
    found = enumerate_short_vectors(L, start)
    best = found[0][0]
    return [v for norm2, v in found if norm2 == best]


def min_distance_squared(L: Lattice) -> int:
    """Exact squared minimum by enumeration; rank-capped."""
    start = min(sum(x * x for x in row) for row in _size_reduce([list(r) for r in L.rows]))
    found = enumerate_short_vectors(L, start)
    return found[0][0]


# -- invariants built on minimal vectors ---------------------------------------


def well_rounded(L: Lattice, minvecs) -> bool:
    """Do the minimal vectors span rank(L) independent directions?"""
    if not minvecs:
        return False
    return intmat.rank_of([list(v) for v in minvecs], L.n) == L.rank


def generated_by_minimals_index(L: Lattice, minvecs) -> int:
    """Index [L : span(minvecs)], with 0 standing for a rank-deficient span."""
    if not minvecs:
        return 0
    span = Lattice.from_generators(minvecs, L.n)
    if span.rank < L.rank:
        return 0
    if L.is_full_rank():
        return span.index_in_ambient() // L.index_in_ambient()
    coeff_rows = []
    for row in span.rows:
        c = intmat.solve_in_span(L._hnf, L._pivots, list(row[1:]))
        assert c is not None, "span of minimal vectors escaped the lattice"
        coeff_rows.append(c)
    rows, pivots = intmat.hnf(coeff_rows, L.rank)
    if len(rows) < L.rank:
        return 0
    out = 1
    for r, c in zip(rows, pivots):
        out *= r[c]
    return out


# -- coordinate-permutation automorphisms --------------------------------------


def _perm_fixes_lattice(L: Lattice, perm) -> bool:
    check = L.member_fast if L.is_full_rank() else L.contains
    for row in L.rows:
        if not check(permute(row, perm)):
            return False
    return True


def permutation_automorphisms(L: Lattice, fixed_index: int = 0, minvecs=None):
    """All coordinate permutations fixing one index that map L onto itself.

    Exhaustive for n - 1 <= 8; beyond that a backtracking search over
    images, pruned by per-coordinate and per-pair value profiles of the
    minimal-vector set, with a full basis check at every leaf.  A
    permutation with sigma(L) subset of L is automatically onto since it
    has determinant +-1.
    """
    n = L.n
    m = n - 1
    free = [i for i in range(n) if i != fixed_index]
    if m > PERM_SEARCH_MAX:
        raise SearchInfeasibleError(f"n - 1 = {m} > {PERM_SEARCH_MAX}")
    if m <= PERM_EXHAUSTIVE_MAX:
        out = []
        for images in itertools.permutations(free):
            perm = [0] * n
            perm[fixed_index] = fixed_index
            for src, dst in zip(free, images):
                perm[src] = dst
            perm = tuple(perm)
            if _perm_fixes_lattice(L, perm):
                out.append(perm)
        return sorted(out)

    if minvecs is None:
        if L.rank <= ENUM_MAX_RANK:
            minvecs = minimal_vectors(L)
        else:
            raise SearchInfeasibleError(
                "profile search needs minimal vectors for n - 1 > "
                f"{PERM_EXHAUSTIVE_MAX}"
            )
    minvecs = sorted(set(minvecs))
    vert = [tuple(sorted(v[i] for v in minvecs)) for i in range(n)]
    pair = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                pair[i][j] = tuple(sorted((v[i], v[j]) for v in minvecs))

    out = []
    image = list(range(n))
    used = [False] * n
    used[fixed_index] = True

    def extend(k):
        if k == len(free):
            perm = tuple(image)
            if _perm_fixes_lattice(L, perm):
                out.append(perm)
            return
        i = free[k]
        for j in free:
            if used[j] or vert[j] != vert[i]:
                continue
            if pair[i][fixed_index] != pair[j][fixed_index]:
                continue
            ok = True
            for k2 in range(k):
                i2 = free[k2]
                if pair[i][i2] != pair[j][image[i2]]:
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                extend(k + 1)
                used[j] = False
        image[i] = i

    extend(0)
    return sorted(out)
