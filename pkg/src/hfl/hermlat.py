"""The function-field lattice of a Hermitian curve.

The lattice is spanned by the divisors of all lines.  Everything here is
verified construction: quotients of suitable line pairs give vectors of
squared norm exactly 2q (minimal_pair_vector checks the pair conditions
and rejects anything else), and decompose_line rewrites any line divisor
as a signed sum of such vectors, raising if the bookkeeping identity
fails.  The three closed families of line-quotient vectors carry the
kissing-number lower bound q^2(q^2-1)(q^3+1).
"""

from dataclasses import dataclass
from math import comb

from . import lattice
from .curve import Curve, Line, Slope, Vertical, curve_make
from .errors import InternalIdentityViolationError, NotMinimalPairError

__all__ = [
    "DecompositionStep",
    "HermitianLattice",
    "KissingFamilies",
    "MinDistanceResult",
    "build",
    "decompose_line",
    "generated_by_minimals",
    "kissing_families",
    "min_distance",
    "minimal_pair_vector",
]


@dataclass(frozen=True)
class DecompositionStep:
    """One signed minimal vector in a line decomposition.

    vector = divisor(numerator) - divisor(denominator); the step
    contributes sign * vector to the decomposed divisor.
    """

    sign: int
    vector: tuple
    numerator: Line
    denominator: Line
    tag: str


@dataclass(frozen=True)
class MinDistanceResult:
    d_squared: int
    exact: bool
    mode: str  # "census" or "families"
    minimal_count: int | None


class HermitianLattice:
    """Lattice of line divisors with its quotient-group structure."""

    def __init__(self, curve: Curve):
        self.curve = curve
        self._div = {line: curve.divisor_of_line(line) for line in curve.all_lines()}
        self.L = lattice.Lattice.from_generators(list(self._div.values()), curve.n)
        self.quotient = self.L.quotient()

    def divisor(self, line: Line):
        d = self._div.get(line)
        if d is None:
            d = self.curve.divisor_of_line(line)
        return d

    def __repr__(self):
        q = self.curve.q
        return f"HermitianLattice(q={q}, n={self.curve.n}, rank={self.L.rank})"


def build(q: int) -> HermitianLattice:
    return HermitianLattice(curve_make(q))


def minimal_pair_vector(curve: Curve, num: Line, den: Line):
    """divisor(num) - divisor(den) when the pair provably gives a vector
    of squared norm 2q; otherwise NotMinimalPairError with the reason.

    Accepted pairs: two verticals; a vertical and a non-tangent slope
    line meeting the curve in exactly one common point; two non-tangent
    slope lines with a common curve point.
    """
    if num == den:
        raise NotMinimalPairError("identical lines")
    num_v = isinstance(num, Vertical)
    den_v = isinstance(den, Vertical)
    if not (num_v and den_v):
        for line in (num, den):
            if isinstance(line, Slope) and curve.is_tangent(line):
                raise NotMinimalPairError(f"tangent line in the pair: {line}")
        if num_v or den_v:
            kind = "vertical/slope"
        else:
            kind = "slope/slope"
        common = set(curve.points_on_line(num)) & set(curve.points_on_line(den))
        if len(common) != 1:
            raise NotMinimalPairError(
                f"{kind} pair shares {len(common)} curve points, need exactly 1"
            )
    a = curve.divisor_of_line(num)
    b = curve.divisor_of_line(den)
    vec = tuple(x - y for x, y in zip(a, b))
    norm2 = sum(x * x for x in vec)
    assert norm2 == 2 * curve.q, f"pair vector has norm^2 {norm2} != {2 * curve.q}"
    return vec


def _step(curve, sign, num, den, tag):
    return DecompositionStep(sign, minimal_pair_vector(curve, num, den), num, den, tag)


def _vertical_steps(curve: Curve, c: int):
    """x - c with c != 0 equals the product over i of (y - d_i)/(x - z^i c),
    d_i the trace fiber of norm(c), z the chosen (q+1)st root of unity."""
    F = curve.field
    ds = F.trace_fiber(F.norm(c))
    steps = []
    for i, d in enumerate(ds, start=1):
        num = Slope(0, F.neg(d))
        den = Vertical(F.mul(F.pow(curve.zeta, i), c))
        steps.append(_step(curve, 1, num, den, "vertical"))
    return steps


def _vertical_origin_steps(curve: Curve):
    """The line x equals the product of (y - x - r_i)/(x - z_i) with r_i
    the trace-zero elements and z_i the values 1 + zeta^m, zeta^m != -1."""
    F = curve.field
    one = 1
    minus_one = F.neg(one)
    rhos = F.trace_fiber(0)
    zs = []
    for m in range(curve.q + 1):
        zm = F.pow(curve.zeta, m)
        if zm != minus_one:
            zs.append(F.add(one, zm))
    steps = []
    for rho, z in zip(rhos, zs):
        num = Slope(minus_one, F.neg(rho))
        den = Vertical(z)
        steps.append(_step(curve, 1, num, den, "vertical_origin"))
    return steps


def _secant_steps(curve: Curve, line: Slope, beta=None):
    """Non-tangent y + bx + c: q - 1 inverted pair steps against the
    shifted tangent-pencil lines, plus two vertical lines decomposed
    recursively.  Any beta with trace(beta) = norm(b) works; the default
    is the smallest."""
    F = curve.field
    b, c = line.b, line.c
    alpha = F.neg(F.frobenius(b))
    target = F.norm(alpha)
    if beta is None:
        beta = F.trace_fiber(target)[0]
    elif F.trace(beta) != target:
        raise ValueError(f"beta={beta} has trace {F.trace(beta)}, need {target}")
    beta_q = F.frobenius(beta)
    d = F.sub(beta_q, c)
    e = F.norm_preimage(F.trace(d))
    ds = [d] + [x for x in F.trace_fiber(F.trace(d)) if x != d]

    steps = []
    for i in range(2, curve.q + 1):
        num = Slope(b, F.sub(beta_q, ds[i - 1]))
        den = Vertical(F.add(alpha, F.mul(F.pow(curve.zeta, i), e)))
        steps.append(_step(curve, -1, num, den, "secant"))
    for i in (0, 1):
        v = Vertical(F.add(alpha, F.mul(F.pow(curve.zeta, i), e)))
        steps.extend(_dispatch(curve, v))
    return steps


def _tangent_steps(curve: Curve, line: Slope):
    """Tangent y + bx + c: shear the defining identity of the tangent at
    the origin by the curve automorphism moving (0,0) to the point of
    tangency; q pair steps plus one non-tangent line decomposed
    recursively."""
    F = curve.field
    b, c = line.b, line.c
    alpha = F.neg(F.frobenius(b))
    one = 1
    minus_one = F.neg(one)
    tag = "tangent_origin" if b == 0 and c == 0 else "tangent"

    j = next(m for m in range(curve.q + 1) if F.pow(curve.zeta, m) == minus_one)
    steps = []
    for i in range(curve.q + 1):
        if i == j:
            continue
        zi = F.pow(curve.zeta, i)
        num = Slope(F.sub(b, zi), F.add(c, F.mul(zi, alpha)))
        den = Slope(b, F.sub(c, F.add(one, zi)))
        steps.append(_step(curve, 1, num, den, tag))
    zj = F.pow(curve.zeta, j)
    rest = Slope(F.sub(b, zj), F.add(c, F.mul(zj, alpha)))
    steps.extend(_dispatch(curve, rest))
    return steps


def _dispatch(curve: Curve, line: Line, beta=None):
    if isinstance(line, Vertical):
        if beta is not None:
            raise ValueError("beta applies only to non-tangent slope lines")
        if line.c == 0:
            return _vertical_origin_steps(curve)
        return _vertical_steps(curve, line.c)
    if curve.is_tangent(line):
        if beta is not None:
            raise ValueError("beta applies only to non-tangent slope lines")
        return _tangent_steps(curve, line)
    return _secant_steps(curve, line, beta=beta)


def decompose_line(curve: Curve, line: Line, beta=None):
    """Signed minimal vectors summing exactly to divisor_of_line(line).

    Every step is built through minimal_pair_vector, and the signed-sum
    identity is recomputed before returning; a mismatch is an internal
    defect, never an input error.
    """
    curve.check_line(line)
    if beta is not None and not 0 <= beta < curve.field.order:
        raise ValueError(f"beta {beta} outside field of order {curve.field.order}")
    steps = _dispatch(curve, line, beta=beta)
    total = [0] * curve.n
    for s in steps:
        for k, x in enumerate(s.vector):
            total[k] += s.sign * x
    expected = curve.divisor_of_line(line)
    if tuple(total) != tuple(expected):
        raise InternalIdentityViolationError(
            f"decomposition of {line} sums to {tuple(total)}, divisor is {tuple(expected)}"
        )
    return steps


@dataclass(frozen=True)
class KissingFamilies:
    """Three closed families of norm^2 = 2q line-quotient vectors.

    pair_vertical: both lines vertical, q^2(q^2-1) vectors.
    vertical_slope: a vertical and a slope line through one common
    point, both orientations, 2q^3(q^2-1) vectors.
    slope_slope: two slope lines through a common point,
    q^3(q^2-1)(q^2-2) vectors.
    """

    pair_vertical: tuple
    vertical_slope: tuple
    slope_slope: tuple

    @property
    def total(self) -> int:
        return len(self.pair_vertical) + len(self.vertical_slope) + len(self.slope_slope)

    def union(self):
        return set(self.pair_vertical) | set(self.vertical_slope) | set(self.slope_slope)


def kissing_families(curve: Curve) -> KissingFamilies:
    F = curve.field
    vert_div = {a: curve.divisor_of_line(Vertical(a)) for a in range(F.order)}
    slope_div = {}

    def sdiv(b, c):
        key = (b, c)
        d = slope_div.get(key)
        if d is None:
            d = curve.divisor_of_line(Slope(b, c))
            slope_div[key] = d
        return d

    def diff(u, v):
        return tuple(x - y for x, y in zip(u, v))

    f1 = []
    for a in range(F.order):
        for b in range(F.order):
            if a != b:
                f1.append(diff(vert_div[a], vert_div[b]))

    f2 = []
    f3 = []
    for pt in curve.places[1:]:
        a, b = pt
        aq = F.frobenius(a)
        slopes = [m for m in range(F.order) if m != aq]
        point_lines = [(F.neg(m), F.sub(F.mul(m, a), b)) for m in slopes]
        vd = vert_div[a]
        for lb, lc in point_lines:
            sd = sdiv(lb, lc)
            f2.append(diff(vd, sd))
            f2.append(diff(sd, vd))
        for l1 in point_lines:
            d1 = sdiv(*l1)
            for l2 in point_lines:
                if l1 != l2:
                    f3.append(diff(d1, sdiv(*l2)))
    return KissingFamilies(tuple(f1), tuple(f2), tuple(f3))


def min_distance(hl: HermitianLattice, cap: int | None = None, workers: int = 1) -> MinDistanceResult:
    """Exact squared minimum when the support census fits the budget,
    otherwise the family upper bound 2q, flagged as such."""
    q = hl.curve.q
    n = hl.curve.n
    cap = lattice.DEFAULT_CENSUS_CAP if cap is None else cap
    if comb(n, q) * comb(n - q, q) <= cap:
        best, vecs = lattice.min_distance_via_scan(hl.L, 2 * q, cap=cap, workers=workers)
        return MinDistanceResult(best, True, "census", len(vecs))
    fams = kissing_families(hl.curve)
    probe = fams.pair_vertical[0]
    assert sum(x * x for x in probe) == 2 * q
    return MinDistanceResult(2 * q, False, "families", None)


def census(hl: HermitianLattice, cap: int | None = None, workers: int = 1):
    """All lattice vectors with q entries +1 and q entries -1."""
    return lattice.census_pm1(hl.L, hl.curve.q, cap=cap, workers=workers)


def generated_by_minimals(hl: HermitianLattice, extra_vectors=()) -> int:
    """Index in the lattice of the span of all decomposition-step vectors
    (optionally extended, e.g. by a census); 1 means they generate."""
    vecs = list(extra_vectors)
    for line in hl.curve.all_lines():
        for s in decompose_line(hl.curve, line):
            vecs.append(s.vector)
    return lattice.generated_by_minimals_index(hl.L, vecs)
