"""Curve automorphisms: explicit families, closure, and induced actions."""

import random

import pytest

from hfl import autgrp, hermlat
from hfl.errors import NotOnCurveError, OrderBudgetExceededError, ZeroScalarError
from hfl.lattice import permute


@pytest.fixture(scope="module")
def G2(curve2):
    return autgrp.full_group(curve2)


@pytest.fixture(scope="module")
def G3(curve3):
    return autgrp.full_group(curve3)


def full_order(q):
    return q**3 * (q**2 - 1) * (q**3 + 1)


def test_translation_composition_law(curve2, curve3):
    for curve in (curve2, curve3):
        F = curve.field
        pts = curve.places[1:]
        rng = random.Random(11)
        for _ in range(20):
            a1, b1 = rng.choice(pts)
            a2, b2 = rng.choice(pts)
            lhs = autgrp.translation(curve, a1, b1).compose(
                autgrp.translation(curve, a2, b2)
            )
            a3 = F.add(a1, a2)
            b3 = F.add(F.add(b1, b2), F.mul(F.frobenius(a1), a2))
            assert lhs == autgrp.translation(curve, a3, b3)


def test_translation_requires_curve_point(curve2):
    F = curve2.field
    bad = next(
        (a, b)
        for a in range(F.order)
        for b in range(F.order)
        if (a, b) not in curve2.place_index
    )
    with pytest.raises(NotOnCurveError):
        autgrp.translation(curve2, *bad)


def test_translations_fix_infinity_and_close(curve2, curve3):
    for curve in (curve2, curve3):
        T = autgrp.closure(autgrp.translation_generators(curve))
        assert T.order == curve.q**3
        assert all(g.image[0] == 0 for g in T.elements)


def test_scaling_group(curve2, curve3):
    for curve in (curve2, curve3):
        F = curve.field
        lam = F.root_of_unity(F.order - 1)
        S = autgrp.closure([autgrp.scaling(curve, lam)])
        assert S.order == F.order - 1
        assert all(g.image[0] == 0 for g in S.elements)
    with pytest.raises(ZeroScalarError):
        autgrp.scaling(curve2, 0)


def test_inversion_is_an_involution(curve2, curve3):
    for curve in (curve2, curve3):
        inv = autgrp.inversion(curve)
        origin = curve.place_index[(0, 0)]
        assert inv.image[0] == origin
        assert inv.image[origin] == 0
        assert inv.compose(inv).is_identity()
        assert inv.inverse() == inv


def test_perm_algebra(curve2):
    g = autgrp.inversion(curve2)
    h = autgrp.translation(curve2, *curve2.places[1])
    assert g.compose(g.inverse()).is_identity()
    assert h.compose(h.inverse()).is_identity()
    # composition order matters and matches image chasing
    gh = g.compose(h)
    for i in range(curve2.n):
        assert gh.image[i] == g.image[h.image[i]]


def test_full_group_orders(G2, G3):
    assert G2.order == full_order(2) == 216
    assert G3.order == full_order(3) == 6048


def test_group_closure_properties(G2):
    els = set(G2.elements)
    sample = random.Random(3).sample(sorted(els, key=lambda g: g.image), 20)
    for g in sample:
        assert g.inverse() in els
        for h in sample:
            assert g.compose(h) in els


def test_stabilizer_orders(G2, G3):
    assert autgrp.stabilizer(G2, 0).order == 24
    assert autgrp.stabilizer(G3, 0).order == 216
    for q, G in ((2, G2), (3, G3)):
        assert autgrp.stabilizer(G, 0).order * (q**3 + 1) == G.order


def test_transitivity(G2, G3, curve2, curve3):
    assert autgrp.orbit_of_index(G2, 0) == set(range(curve2.n))
    assert autgrp.orbit_of_index(G3, 0) == set(range(curve3.n))
    # sharply 2-transitive on ordered pairs for q = 2: 9 * 8 = 72
    assert len(autgrp.orbit_of_pair(G2, 0, 1)) == 72


def test_lattice_stability(G2, G3, hl2, hl3):
    assert autgrp.lattice_stable_under(G2, hl2.L)
    assert autgrp.lattice_stable_under(G2, hl2.L, generators_only=True)
    assert autgrp.lattice_stable_under(G3, hl3.L, generators_only=True)


def test_orbit_of_minimal_vector_is_census(G2, hl2):
    vecs = set(hermlat.census(hl2))
    v = min(vecs)
    assert autgrp.orbit_of_vector(G2, v) == vecs


def test_classgroup_action_q2(G2, hl2):
    act = autgrp.induced_classgroup_action(G2, hl2.L)
    assert act.mods == (3, 3)
    assert act.kernel_size == 9
    assert not act.injective
    assert len(act.matrices) == G2.order
    assert len(set(act.matrices)) == G2.order // act.kernel_size == 24


def test_classgroup_action_q3(G3, hl3):
    act = autgrp.induced_classgroup_action(G3, hl3.L)
    assert act.mods == (4,) * 6
    assert act.kernel_size == 1
    assert act.injective


def test_tangent_divisors_permuted(G2, curve2, hl2):
    tangents = {
        tuple(curve2.divisor_of_line(curve2.tangent_line_at(*pt)))
        for pt in curve2.places[1:]
    }
    assert len(tangents) == 8
    # the affine tangent divisors all look like 3(P - Q_inf), so only the
    # stabilizer of the infinite place permutes them among themselves
    stab = autgrp.stabilizer(G2, 0)
    for g in stab.elements:
        assert {permute(d, g.image) for d in tangents} == tangents
    # the full group spreads one of them over every 3(e_i - e_j), i != j
    orbit = autgrp.orbit_of_vector(G2, min(tangents))
    expected = set()
    for i in range(curve2.n):
        for j in range(curve2.n):
            if i != j:
                v = [0] * curve2.n
                v[i], v[j] = 3, -3
                expected.add(tuple(v))
    assert orbit == expected
    assert all(hl2.L.contains(v) for v in orbit)


def test_closure_budget_and_validation(curve2):
    gens = autgrp.translation_generators(curve2)
    with pytest.raises(OrderBudgetExceededError):
        autgrp.closure(gens, max_order=3)
    with pytest.raises(ValueError):
        autgrp.closure([])
