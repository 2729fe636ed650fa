"""Curve automorphisms as permutations of the rational places.

Three explicit families act on the place list: translations by curve
points, scalings compatible with the defining equation's weighting, and
the inversion swapping the infinite place with the origin.  Their BFS
closure is the full automorphism group; its order, point stabilizer,
orbits, and the induced action on the divisor class group are all
computed exactly, never assumed.
"""

from dataclasses import dataclass

from .curve import Curve
from .errors import NotOnCurveError, OrderBudgetExceededError, ZeroScalarError
from .lattice import permute

DEFAULT_ORDER_CAP = 10**6


@dataclass(frozen=True, eq=False)
class PlacePerm:
    """Permutation of place indices; equality and hashing by image."""

    image: tuple
    tag: str

    def __eq__(self, other):
        return isinstance(other, PlacePerm) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def compose(self, other: "PlacePerm") -> "PlacePerm":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        return PlacePerm(tuple(self.image[j] for j in other.image), "composite")

    def inverse(self) -> "PlacePerm":
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return PlacePerm(tuple(inv), "composite")

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))


def _affine_perm(curve: Curve, point_map, tag: str, inf_image=None) -> PlacePerm:
    """Build a PlacePerm from an affine point map, checking every image
    lands back on the curve and the whole map is a bijection."""
    image = [0] * curve.n
    if inf_image is not None:
        image[0] = curve.place_index[inf_image]
    for idx, pt in enumerate(curve.places[1:], start=1):
        target = point_map(pt)
        j = curve.place_index.get(target)
        if j is None:
            raise NotOnCurveError(f"{tag} maps {pt} to {target}, not a curve point")
        image[idx] = j
    perm = tuple(image)
    assert len(set(perm)) == curve.n, f"{tag} is not a bijection"
    return PlacePerm(perm, tag)


def translation(curve: Curve, a: int, b: int) -> PlacePerm:
    """(u, v) -> (u + a, v + a^q u + b); a curve automorphism exactly
    when (a, b) is itself a curve point, and the infinite place stays put."""
    F = curve.field
    if (a, b) not in curve.place_index:
        raise NotOnCurveError(f"translation parameters ({a}, {b}) not on the curve")
    aq = F.frobenius(a)

    def step(pt):
        u, v = pt
        return (F.add(u, a), F.add(v, F.add(F.mul(aq, u), b)))

    return _affine_perm(curve, step, f"translation({a},{b})", inf_image=None)


def scaling(curve: Curve, lam: int) -> PlacePerm:
    """(u, v) -> (lam u, lam^{q+1} v), fixing the infinite place."""
    F = curve.field
    if lam == 0:
        raise ZeroScalarError("scaling by zero is not invertible")
    lam_pow = F.pow(lam, curve.q + 1)

    def step(pt):
        u, v = pt
        return (F.mul(lam, u), F.mul(lam_pow, v))

    return _affine_perm(curve, step, f"scaling({lam})", inf_image=None)


def inversion(curve: Curve) -> PlacePerm:
    """Swap the infinite place with the origin place; elsewhere
    (u, v) -> (u/v, 1/v).  Only the origin has v = 0."""
    F = curve.field
    image = [0] * curve.n
    origin = curve.place_index[(0, 0)]
    image[0] = origin
    image[origin] = 0
    for idx, pt in enumerate(curve.places[1:], start=1):
        u, v = pt
        if (u, v) == (0, 0):
            continue
        target = (F.div(u, v), F.inv(v))
        j = curve.place_index.get(target)
        if j is None:
            raise NotOnCurveError(f"inversion maps {pt} to {target}, not a curve point")
        image[idx] = j
    perm = tuple(image)
    assert len(set(perm)) == curve.n, "inversion is not a bijection"
    return PlacePerm(perm, "inversion")


@dataclass(frozen=True)
class PermGroup:
    elements: tuple
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: PlacePerm) -> bool:
        return perm in set(self.elements)


def closure(generators, max_order: int = DEFAULT_ORDER_CAP) -> PermGroup:
    """BFS closure of the generators under composition."""
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    n = len(generators[0].image)
    identity = PlacePerm(tuple(range(n)), "identity")
    seen = {identity.image: identity}
    queue = [identity]
    while queue:
        cur = queue.pop()
        for g in generators:
            nxt = g.compose(cur)
            if nxt.image not in seen:
                if len(seen) >= max_order:
                    raise OrderBudgetExceededError(
                        f"closure exceeded {max_order} elements"
                    )
                seen[nxt.image] = nxt
                queue.append(nxt)
    elements = tuple(sorted(seen.values(), key=lambda p: p.image))
    return PermGroup(elements, tuple(generators))


def translation_generators(curve: Curve):
    """A compact set generating all q^3 translations: one translation per
    x-coordinate plus the vertical translations by trace-zero shifts."""
    F = curve.field
    gens = []
    for a in range(F.order):
        b = F.trace_fiber(F.norm(a))[0]
        gens.append(translation(curve, a, b))
    for rho in F.trace_fiber(0):
        if rho != 0:
            gens.append(translation(curve, 0, rho))
    return gens


def full_group(curve: Curve, max_order: int = DEFAULT_ORDER_CAP) -> PermGroup:
    """Closure of translations, scalings, and the inversion."""
    F = curve.field
    gens = translation_generators(curve)
    gens.append(scaling(curve, F.root_of_unity(F.order - 1)))
    gens.append(inversion(curve))
    return closure(gens, max_order=max_order)


def stabilizer(group: PermGroup, index: int = 0) -> PermGroup:
    els = tuple(g for g in group.elements if g.image[index] == index)
    return PermGroup(els, els)


def orbit_of_index(group: PermGroup, index: int):
    return {g.image[index] for g in group.elements}


def orbit_of_pair(group: PermGroup, i: int, j: int):
    return {(g.image[i], g.image[j]) for g in group.elements}


def orbit_of_vector(group: PermGroup, v):
    return {permute(v, g.image) for g in group.elements}


def lattice_stable_under(group: PermGroup, L, generators_only: bool = False) -> bool:
    """True iff every group element maps the lattice onto itself.

    With generators_only the check runs over group.generators; that is
    equivalent (stability is closed under composition and, the group
    being finite, under inversion) and much cheaper for big groups.
    """
    check = L.member_fast if L.is_full_rank() else L.contains
    perms = group.generators if generators_only else group.elements
    for g in perms:
        for row in L.rows:
            if not check(permute(row, g.image)):
                return False
    return True


@dataclass(frozen=True)
class ClassgroupAction:
    """The induced action on the quotient group A_{n-1}/L.

    matrices[i] is the action of group.elements[i] on the nontrivial
    quotient generators, rows mod the elementary divisors."""

    mods: tuple
    matrices: tuple
    kernel_size: int
    injective: bool


def induced_classgroup_action(group: PermGroup, L) -> ClassgroupAction:
    mods, gens = L.quotient_generators()
    _, cls = L.class_map()
    m = len(mods)
    ident = tuple(
        tuple(1 if s == t else 0 for s in range(m)) for t in range(m)
    )

    def class_of(v):
        acc = [0] * m
        for i, x in enumerate(v):
            if x:
                ci = cls[i]
                for s in range(m):
                    acc[s] += x * ci[s]
        return tuple(a % md for a, md in zip(acc, mods))

    matrices = []
    kernel = 0
    for g in group.elements:
        mat = tuple(class_of(permute(gen, g.image)) for gen in gens)
        matrices.append(mat)
        if mat == ident:
            kernel += 1
    return ClassgroupAction(
        mods=tuple(mods),
        matrices=tuple(matrices),
        kernel_size=kernel,
        injective=(kernel == 1),
    )
