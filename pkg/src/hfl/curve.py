"""Rational places of the Hermitian curve y^q + y = x^(q+1) over GF(q^2).

Places are indexed 0..q^3: index 0 is the place at infinity, the affine
places follow sorted by (alpha, beta) encoding.  Lines come in two
canonical forms, x - c and y + b*x + c, and every line's divisor of
zeros/poles on the curve is computed in closed form: a vertical meets the
curve in the q points above x = c, a tangent meets it in one point with
multiplicity q + 1, and any other line meets it in q + 1 distinct points.
"""

from dataclasses import dataclass

from .errors import IdenticalLinesError, NotOnCurveError, UnsupportedQError
from .gf import Field, field_make

SUPPORTED_Q = (2, 3, 4, 5, 7, 8)


@dataclass(frozen=True)
class Vertical:
    """The line x - c."""

    c: int


@dataclass(frozen=True)
class Slope:
    """The line y + b*x + c."""

    b: int
    c: int


Line = Vertical | Slope

Place = tuple[int, int] | None  # None is the place at infinity


def _q_to_prime_power(q: int) -> tuple[int, int]:
    for p in (2, 3, 5, 7):
        e = 0
        m = q
        while m % p == 0:
            m //= p
            e += 1
        if m == 1:
            return p, e
    raise UnsupportedQError(f"q = {q} is not a supported prime power")


class Curve:
    """Hermitian curve data for one q: places, lines, divisors."""

    def __init__(self, q: int):
        if q not in SUPPORTED_Q:
            raise UnsupportedQError(f"q = {q} not in {SUPPORTED_Q}")
        p, e = _q_to_prime_power(q)
        self.q = q
        self.field: Field = field_make(p, 2 * e)
        assert self.field.q == q
        self.genus = q * (q - 1) // 2
        self.n = q**3 + 1
        F = self.field
        places: list[Place] = [None]
        for a in F.elements():
            for b in F.trace_fiber(F.norm(a)):
                places.append((a, b))
        self.places: tuple[Place, ...] = tuple(places)
        assert len(self.places) == self.n
        self.place_index: dict[Place, int] = {pl: i for i, pl in enumerate(self.places)}
        self.zeta = F.root_of_unity(q + 1)

    # -- lines ----------------------------------------------------------------

    def all_lines(self) -> list[Line]:
        """All q^4 + q^2 lines: verticals by c, then slopes by (b, c)."""
        F = self.field
        lines: list[Line] = [Vertical(c) for c in F.elements()]
        lines.extend(Slope(b, c) for b in F.elements() for c in F.elements())
        return lines

    def check_line(self, line: Line) -> Line:
        """Validate the coefficient encodings against the field order."""
        order = self.field.order
        coeffs = (line.c,) if isinstance(line, Vertical) else (line.b, line.c)
        for enc in coeffs:
            if not 0 <= enc < order:
                raise ValueError(f"coefficient {enc} outside field of order {order}")
        return line

    def is_tangent(self, line: Line) -> bool:
        """Tangency of y + b*x + c amounts to c^q + c = b^(q+1)."""
        if isinstance(line, Vertical):
            return False
        F = self.field
        return F.trace(line.c) == F.norm(line.b)

    def tangent_line_at(self, a: int, b: int) -> Slope:
        """The unique line meeting the curve only at (a, b): y - a^q*x + b^q."""
        F = self.field
        if F.trace(b) != F.norm(a):
            raise NotOnCurveError(f"({a}, {b}) does not satisfy the curve equation")
        return Slope(F.neg(F.frobenius(a)), F.frobenius(b))

    def points_on_line(self, line: Line) -> tuple[tuple[int, int], ...]:
        """Affine curve points on the line, in closed form, sorted by place order."""
        F = self.field
        self.check_line(line)
        if isinstance(line, Vertical):
            return tuple((line.c, d) for d in F.trace_fiber(F.norm(line.c)))
        b, c = line.b, line.c
        t = F.sub(F.norm(b), F.trace(c))
        if t == 0:
            return ((F.neg(F.frobenius(b)), F.frobenius(c)),)
        delta = F.norm_preimage(t)
        x0 = F.neg(F.frobenius(b))
        nb = F.norm(b)
        pts = []
        for i in range(self.q + 1):
            s = F.mul(delta, F.pow(self.zeta, i))
            pts.append((F.add(x0, s), F.sub(F.sub(nb, c), F.mul(b, s))))
        return tuple(sorted(pts))

    def points_on_line_bruteforce(self, line: Line) -> tuple[tuple[int, int], ...]:
        """Same set by substituting every affine place into the line equation."""
        F = self.field
        pts = []
        for pl in self.places[1:]:
            a, b = pl
            if isinstance(line, Vertical):
                onit = a == line.c
            else:
                onit = F.add(b, F.add(F.mul(line.b, a), line.c)) == 0
            if onit:
                pts.append(pl)
        return tuple(pts)

    # -- divisors ---------------------------------------------------------------

    def divisor_of_line(self, line: Line) -> tuple[int, ...]:
        """Valuation vector of the line over all places; always sums to zero."""
        div = [0] * self.n
        pts = self.points_on_line(line)
        if isinstance(line, Vertical):
            for pt in pts:
                div[self.place_index[pt]] = 1
            div[0] = -self.q
        elif len(pts) == 1:
            div[self.place_index[pts[0]]] = self.q + 1
            div[0] = -(self.q + 1)
        else:
            for pt in pts:
                div[self.place_index[pt]] = 1
            div[0] = -(self.q + 1)
        return tuple(div)

    def line_quotient(self, num: Line, den: Line) -> tuple[int, ...]:
        """Divisor of num/den; the two lines must differ."""
        if num == den:
            raise IdenticalLinesError(f"line quotient needs distinct lines, got {num}")
        dn = self.divisor_of_line(num)
        dd = self.divisor_of_line(den)
        return tuple(x - y for x, y in zip(dn, dd))

    def __repr__(self):
        return f"Curve(q={self.q}, n={self.n})"


def curve_make(q: int) -> Curve:
    return Curve(q)
