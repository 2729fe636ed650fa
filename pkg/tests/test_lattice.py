import itertools
import random

import pytest

from hfl import lattice
from hfl.errors import (
    BudgetExceededError,
    DimensionMismatchError,
    EmptyGeneratorSetError,
    NotFullRankError,
    SearchInfeasibleError,
)


def full_root_lattice(n):
    """All of A_{n-1}: differences of consecutive unit vectors."""
    gens = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        gens.append(tuple(v))
    return lattice.Lattice.from_generators(gens, n)


def random_full_rank(rng, n):
    while True:
        gens = []
        for _ in range(n + 1):
            v = [rng.randint(-3, 3) for _ in range(n - 1)]
            gens.append(tuple(v) + (-sum(v),))
        L = lattice.Lattice.from_generators(gens, n)
        if L.is_full_rank():
            return L


def test_construction_errors():
    with pytest.raises(EmptyGeneratorSetError):
        lattice.Lattice.from_generators([], 3)
    with pytest.raises(DimensionMismatchError):
        lattice.Lattice.from_generators([(1, -1)], 3)
    with pytest.raises(ValueError):
        lattice.Lattice.from_generators([(1, 1, 1)], 3)


def test_rows_reconstruct_dropped_coordinate():
    L = lattice.Lattice.from_generators([(2, -2, 0), (0, 2, -2)], 3)
    for row in L.rows:
        assert sum(row) == 0
        assert len(row) == 3


def test_scaled_a2_example():
    L = lattice.Lattice.from_generators([(2, -2, 0), (0, 2, -2)], 3)
    assert L.is_full_rank()
    assert L.index_in_ambient() == 4
    assert L.quotient().nontrivial == (2, 2)
    assert L.determinant() == (4, 3)
    mv = lattice.minimal_vectors(L)
    assert len(mv) == 6
    assert all(sum(x * x for x in v) == 8 for v in mv)
    assert lattice.well_rounded(L, mv)
    assert lattice.generated_by_minimals_index(L, mv) == 1


def test_contains_and_member_fast_agree():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(3, 7)
        L = random_full_rank(rng, n)
        for _ in range(30):
            v = [rng.randint(-4, 4) for _ in range(n - 1)]
            v = tuple(v) + (-sum(v),)
            assert L.contains(v) == L.member_fast(v)
        # rows of the lattice itself are members
        for row in L.rows:
            assert L.contains(row) and L.member_fast(row)
        # vectors with nonzero sum are never members
        w = (1,) + (0,) * (n - 1)
        assert not L.contains(w)
        assert not L.member_fast(w)


def test_closure_properties():
    rng = random.Random(9)
    L = random_full_rank(rng, 5)
    rows = list(L.rows)
    for a, b in itertools.combinations(rows, 2):
        s = tuple(x + y for x, y in zip(a, b))
        d = tuple(x - y for x, y in zip(a, b))
        assert L.contains(s) and L.contains(d)
        assert L.contains(tuple(-x for x in a))


def test_quotient_and_index_consistency():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(3, 6)
        L = random_full_rank(rng, n)
        q = L.quotient()
        assert q.index == L.index_in_ambient()
        nontrivial = q.nontrivial
        for a, b in zip(nontrivial, nontrivial[1:]):
            assert b % a == 0
        mods, gens = L.quotient_generators()
        assert mods == nontrivial
        # each quotient generator vector is sum-zero and NOT in L unless trivial
        for m, g in zip(mods, gens):
            assert sum(g) == 0
            assert not L.contains(g)
            assert L.contains(tuple(m * x for x in g))


def test_not_full_rank_errors():
    L = lattice.Lattice.from_generators([(1, -1, 0, 0)], 4)
    assert not L.is_full_rank()
    with pytest.raises(NotFullRankError):
        L.index_in_ambient()
    with pytest.raises(NotFullRankError):
        L.quotient()
    with pytest.raises(NotFullRankError):
        L.class_map()


def test_census_on_full_root_lattice():
    # A_{n-1} contains every e_i - e_j: n(n-1) ordered pairs
    for n in (3, 4, 5, 6):
        L = full_root_lattice(n)
        found = lattice.census_pm1(L, 1)
        assert len(found) == n * (n - 1)
        assert all(sum(v) == 0 and sum(x * x for x in v) == 2 for v in found)
        assert found == sorted(found)


def test_census_negation_closure_and_determinism(hl2):
    L = hl2.L
    c1 = lattice.census_pm1(L, 2, workers=1)
    c2 = lattice.census_pm1(L, 2, workers=2)
    c8 = lattice.census_pm1(L, 2, workers=8)
    assert c1 == c2 == c8
    s = set(c1)
    assert all(tuple(-x for x in v) in s for v in s)


def test_census_budget():
    L = full_root_lattice(6)
    with pytest.raises(BudgetExceededError):
        lattice.census_pm1(L, 2, cap=10)


def test_census_brute_oracle():
    """Census against direct support enumeration with plain contains()."""
    rng = random.Random(29)
    for _ in range(10):
        n = rng.randint(4, 6)
        L = random_full_rank(rng, n)
        for q in (1, 2):
            if 2 * q > n:
                continue
            expected = set()
            for plus in itertools.combinations(range(n), q):
                rest = [i for i in range(n) if i not in plus]
                for minus in itertools.combinations(rest, q):
                    v = [0] * n
                    for i in plus:
                        v[i] = 1
                    for i in minus:
                        v[i] = -1
                    if L.contains(v):
                        expected.add(tuple(v))
            assert set(lattice.census_pm1(L, q)) == expected


def test_scan_vs_enumeration():
    """Shape-complete scan and branch-and-bound must agree exactly."""
    rng = random.Random(7)
    done = 0
    while done < 25:
        n = rng.randint(3, 7)
        L = random_full_rank(rng, n)
        bound = rng.randint(2, 12)
        a = {v for _, v in lattice.enumerate_short_vectors(L, bound)}
        b = set(lattice.scan_short_vectors(L, bound))
        assert a == b, (L.rows, bound)
        for v in a:
            assert 0 < sum(x * x for x in v) <= bound
        done += 1


def test_enumeration_norms_and_antipodes():
    L = full_root_lattice(5)
    found = lattice.enumerate_short_vectors(L, 2)
    assert len(found) == 20
    vs = {v for _, v in found}
    assert all(tuple(-x for x in v) in vs for v in vs)


def test_enumeration_rank_cap():
    L = full_root_lattice(15)
    with pytest.raises(SearchInfeasibleError):
        lattice.enumerate_short_vectors(L, 2)


def test_min_distance_via_scan():
    L = lattice.Lattice.from_generators([(2, -2, 0), (0, 2, -2)], 3)
    best, vecs = lattice.min_distance_via_scan(L, 8)
    assert best == 8
    assert len(vecs) == 6
    with pytest.raises(ValueError):
        lattice.min_distance_via_scan(L, 2)


def test_permute_moves_values():
    v = (5, 6, 7)
    # value at position i lands at position perm[i]
    assert lattice.permute(v, (1, 2, 0)) == (7, 5, 6)
    assert lattice.permute(v, (0, 1, 2)) == v


def test_permutation_automorphisms_full_root():
    # A_{n-1} is fixed by every coordinate permutation
    for n in (3, 4, 5):
        L = full_root_lattice(n)
        perms = lattice.permutation_automorphisms(L, fixed_index=0)
        import math

        assert len(perms) == math.factorial(n - 1)
        assert all(p[0] == 0 for p in perms)


def test_permutation_automorphisms_fixed_index():
    # scaling one coordinate pair breaks most symmetries
    L = lattice.Lattice.from_generators([(3, -3, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1)], 4)
    perms0 = lattice.permutation_automorphisms(L, fixed_index=0)
    # identity plus anything permuting coordinates with equal roles
    assert all(p[0] == 0 for p in perms0)
    assert tuple(range(4)) in perms0
    perms3 = lattice.permutation_automorphisms(L, fixed_index=3)
    assert all(p[3] == 3 for p in perms3)
    for p in perms3:
        assert lattice._perm_fixes_lattice(L, p)


def test_permutation_group_closure():
    rng = random.Random(43)
    for _ in range(10):
        L = random_full_rank(rng, rng.randint(3, 5))
        perms = lattice.permutation_automorphisms(L, fixed_index=0)
        pset = set(perms)
        assert tuple(range(L.n)) in pset
        for p in perms:
            inv = [0] * L.n
            for i, j in enumerate(p):
                inv[j] = i
            assert tuple(inv) in pset
        for a in perms[:6]:
            for b in perms[:6]:
                comp = tuple(a[b[i]] for i in range(L.n))
                assert comp in pset


def test_profile_search_matches_exhaustive(monkeypatch, hl2):
    """Force the pruned backtracking path on inputs the exhaustive route
    can still certify, and require identical output."""
    cases = [
        full_root_lattice(5),
        lattice.Lattice.from_generators([(2, -2, 0), (0, 2, -2)], 3),
        lattice.Lattice.from_generators(
            [(1, 1, -1, -1, 0), (0, 1, 1, -1, -1), (2, 0, -2, 0, 0), (1, -1, 1, -1, 0)], 5
        ),
        hl2.L,
    ]
    for L in cases:
        for fixed in (0, L.n - 1):
            expected = lattice.permutation_automorphisms(L, fixed_index=fixed)
            monkeypatch.setattr(lattice, "PERM_EXHAUSTIVE_MAX", 1)
            got = lattice.permutation_automorphisms(L, fixed_index=fixed)
            monkeypatch.undo()
            assert got == expected, (L.rows, fixed)


def test_permutation_search_caps():
    L = full_root_lattice(31)
    with pytest.raises(SearchInfeasibleError):
        lattice.permutation_automorphisms(L)
    # n - 1 in search range but rank too big for minimal vectors
    L2 = full_root_lattice(15)
    with pytest.raises(SearchInfeasibleError):
        lattice.permutation_automorphisms(L2)
    # explicit minimal vectors unlock it; A_14 has all perms, so don't run
    # the full search; instead check the q=2 curve lattice path in
    # test_profile_search_matches_exhaustive.


def test_generated_by_minimals_index_cases():
    # full-rank minimal span generating the whole lattice: index 1
    L = lattice.Lattice.from_generators([(2, -2, 0), (0, 2, -2)], 3)
    mv = lattice.minimal_vectors(L)
    assert lattice.well_rounded(L, mv)
    assert lattice.generated_by_minimals_index(L, mv) == 1
    # (1,1,-2) collapses onto <(1,-1,0),(0,2,-2)>; minimals are just
    # +-(1,-1,0), spanning rank 1 of 2, so the index reports 0
    L1 = lattice.Lattice.from_generators([(2, -2, 0), (0, 2, -2), (1, 1, -2)], 3)
    mv1 = lattice.minimal_vectors(L1)
    assert sorted(mv1) == sorted([(1, -1, 0), (-1, 1, 0)])
    assert not lattice.well_rounded(L1, mv1)
    assert lattice.generated_by_minimals_index(L1, mv1) == 0
    # rank-deficient minimal span reports 0
    L2 = lattice.Lattice.from_generators([(5, -5, 0, 0), (0, 0, 1, -1)], 4)
    mv2 = lattice.minimal_vectors(L2)
    assert all(sum(x * x for x in v) == 2 for v in mv2)
    assert not lattice.well_rounded(L2, mv2)
    assert lattice.generated_by_minimals_index(L2, mv2) == 0


def test_eq_and_hash_canonical():
    A = lattice.Lattice.from_generators([(1, -1, 0), (0, 1, -1)], 3)
    B = lattice.Lattice.from_generators([(0, 1, -1), (1, 0, -1), (1, -1, 0)], 3)
    assert A == B
    assert hash(A) == hash(B)
    C = lattice.Lattice.from_generators([(2, -2, 0), (0, 2, -2)], 3)
    assert A != C
