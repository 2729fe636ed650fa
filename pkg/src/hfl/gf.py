"""Exact arithmetic in GF(p^k) on integer-encoded elements.

An element of GF(p^k) is a plain Python int in [0, p**k): the integer
a0 + a1*p + ... + a_{k-1}*p**(k-1) encodes the coordinate vector
(a0, ..., a_{k-1}) with respect to the power basis 1, x, ..., x^(k-1).
The modulus is the monic irreducible polynomial of degree k over GF(p)
whose non-leading coefficient vector has the smallest integer encoding,
so field construction is deterministic with no lookup tables shipped.

Fields of square order p^(2m) = q^2 additionally expose the q-power
Frobenius, the relative trace and norm onto GF(q), exact fiber solvers
for both, and roots of unity of order dividing q + 1.
"""

import functools

from .errors import (
    DegreeOutOfRangeError,
    FieldNotSquareOrderError,
    NonPrimeError,
    TargetNotInSubfieldError,
)

MAX_ORDER = 2**20
_TABLE_ORDER = 256       # full add/mul tables below this
_LOG_ORDER = 2**16       # log/antilog tables below this


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# -- polynomial helpers over GF(p); coefficients are little-endian tuples --

def _poly_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mulmod(a, b, mod, p):
    k = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce by the monic modulus
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(k):
                res[i - k + j] = (res[i - k + j] - c * mod[j]) % p
    return _poly_trim(tuple(res[:k] if len(res) > k else res))


def _poly_powmod(a, e, mod, p):
    result = (1,)
    base = a
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b) and _poly_trim(tuple(r)):
            r = list(_poly_trim(tuple(r)))
            if len(r) < len(b):
                break
            c = (r[-1] * inv) % p
            shift = len(r) - len(b)
            for j, bj in enumerate(b):
                r[shift + j] = (r[shift + j] - c * bj) % p
            r = list(_poly_trim(tuple(r)))
        a, b = b, _poly_trim(tuple(r))
    return a


def _is_irreducible(coeffs, p):
    """Monic coeffs of degree k: irreducible over GF(p)?

    Uses the standard criterion: x^(p^k) == x mod f, and for every prime
    r | k the polynomial x^(p^(k/r)) - x is coprime to f.
    """
    k = len(coeffs) - 1
    if k == 1:
        return True
    x = (0, 1)
    xq = _poly_powmod(x, p**k, coeffs, p)
    if _poly_trim(xq) != x:
        return False
    for r in _prime_factors(k):
        d = k // r
        xd = _poly_powmod(x, p**d, coeffs, p)
        diff = list(xd) + [0] * (2 - len(xd))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(coeffs, _poly_trim(tuple(diff)), p)
        if len(g) > 1:
            return False
    return True


def _smallest_irreducible(p: int, k: int):
    """Monic irreducible of degree k with the smallest low-coefficient encoding."""
    for enc in range(p**k):
        coeffs = []
        e = enc
        for _ in range(k):
            coeffs.append(e % p)
            e //= p
        cand = tuple(coeffs) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(p^k) with all operations on integer encodings."""

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise NonPrimeError(f"p = {p} is not prime")
        if not 1 <= k <= 8:
            raise DegreeOutOfRangeError(f"k = {k} outside 1..8")
        if p**k > MAX_ORDER:
            raise DegreeOutOfRangeError(f"p^k = {p**k} exceeds {MAX_ORDER}")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = _smallest_irreducible(p, k)
        self._exp = None
        self._log = None
        self._mul_table = None
        self._add_table = None
        self._trace_fibers = None
        self._norm_fibers = None
        if self.order <= _LOG_ORDER:
            self._build_log_tables()
        if self.order <= _TABLE_ORDER:
            self._build_full_tables()

    # -- encoding ----------------------------------------------------------

    def decode(self, a: int):
        digits = []
        for _ in range(self.k):
            digits.append(a % self.p)
            a //= self.p
        return tuple(digits)

    def encode(self, digits) -> int:
        a = 0
        for d in reversed(tuple(digits)):
            a = a * self.p + d % self.p
        return a

    def elements(self):
        return range(self.order)

    # -- table construction --------------------------------------------------

    def _mul_generic(self, a: int, b: int) -> int:
        prod = _poly_mulmod(self.decode(a), self.decode(b), self.modulus, self.p)
        return self.encode(prod + (0,) * (self.k - len(prod)))

    def _build_log_tables(self):
        n = self.order - 1
        fac = _prime_factors(n)
        g = None
        for cand in range(2, self.order):
            if all(self._pow_generic(cand, n // f) != 1 for f in fac):
                g = cand
                break
        if g is None:  # order 2: the unit 1 generates the trivial group
            g = 1
        exp = [1] * (2 * n)
        acc = 1
        for i in range(1, n):
            acc = self._mul_generic(acc, g)
            exp[i] = acc
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        log = [0] * self.order
        for i in range(n):
            log[exp[i]] = i
        self._exp, self._log = exp, log

    def _pow_generic(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_generic(result, base)
            base = self._mul_generic(base, base)
            e >>= 1
        return result

    def _build_full_tables(self):
        q = self.order
        add = [0] * (q * q)
        mul = [0] * (q * q)
        digits = [self.decode(a) for a in range(q)]
        for a in range(q):
            da = digits[a]
            arow = a * q
            for b in range(a, q):
                s = self.encode(tuple((x + y) % self.p for x, y in zip(da, digits[b])))
                add[arow + b] = s
                add[b * q + a] = s
        n = q - 1
        exp, log = self._exp, self._log
        for a in range(1, q):
            la = log[a]
            arow = a * q
            for b in range(a, q):
                m = exp[la + log[b]]
                mul[arow + b] = m
                mul[b * q + a] = m
        self._add_table = add
        self._mul_table = mul

    # -- ring operations -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a * self.order + b]
        if self.p == 2:
            return a ^ b
        return self.encode(tuple((x + y) % self.p for x, y in zip(self.decode(a), self.decode(b))))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.encode(tuple((-x) % self.p for x in self.decode(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.order + b]
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_generic(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self._exp is not None:
            return self._exp[self.order - 1 - self._log[a]]
        return self._pow_generic(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0 if e else 1
        e %= self.order - 1
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        return self._pow_generic(a, e)

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        n = self.order - 1
        o = n
        for f in _prime_factors(n):
            while o % f == 0 and self.pow(a, o // f) == 1:
                o //= f
        return o

    # -- square-order structure ---------------------------------------------

    @property
    def q(self) -> int:
        """Subfield size q for fields of order q^2."""
        if self.k % 2:
            raise FieldNotSquareOrderError(f"GF({self.p}^{self.k}) has no square order")
        return self.p ** (self.k // 2)

    def frobenius(self, a: int) -> int:
        """The q-power map a -> a^q; an involution on GF(q^2)."""
        return self.pow(a, self.q)

    def trace(self, a: int) -> int:
        """Relative trace a^q + a, landing in GF(q)."""
        return self.add(self.frobenius(a), a)

    def norm(self, a: int) -> int:
        """Relative norm a^(q+1), landing in GF(q)."""
        return self.mul(self.frobenius(a), a)

    def in_subfield(self, a: int) -> bool:
        return self.frobenius(a) == a

    def _build_fibers(self):
        tf: dict[int, list[int]] = {}
        nf: dict[int, list[int]] = {}
        for z in range(self.order):
            tf.setdefault(self.trace(z), []).append(z)
            nf.setdefault(self.norm(z), []).append(z)
        self._trace_fibers = {c: tuple(v) for c, v in tf.items()}
        self._norm_fibers = {c: tuple(v) for c, v in nf.items()}

    def trace_fiber(self, c: int):
        """All q solutions z of z^q + z = c, ascending; c must lie in GF(q)."""
        if not self.in_subfield(c):
            raise TargetNotInSubfieldError(f"trace target {c} not in GF({self.q})")
        if self._trace_fibers is None:
            self._build_fibers()
        return self._trace_fibers[c]

    def norm_fiber(self, t: int):
        """All solutions z of z^(q+1) = t, ascending (q+1 of them for t != 0)."""
        if not self.in_subfield(t):
            raise TargetNotInSubfieldError(f"norm target {t} not in GF({self.q})")
        if self._norm_fibers is None:
            self._build_fibers()
        return self._norm_fibers.get(t, ())

    def norm_preimage(self, t: int) -> int:
        """The smallest z with z^(q+1) = t; zero exactly for t = 0."""
        fiber = self.norm_fiber(t)
        return fiber[0]

    def root_of_unity(self, m: int) -> int:
        """Smallest element of multiplicative order exactly m."""
        if m < 1 or (self.order - 1) % m:
            raise ValueError(f"no element of order {m} in GF({self.order})*")
        for z in range(1, self.order):
            if self.pow(z, m) == 1 and all(self.pow(z, m // f) != 1 for f in _prime_factors(m)):
                return z
        raise AssertionError("unreachable: cyclic group has elements of every dividing order")

    def __repr__(self):
        return f"Field(p={self.p}, k={self.k})"


@functools.lru_cache(maxsize=None)
def field_make(p: int, k: int) -> Field:
    """Canonical GF(p^k); repeated calls return the same object."""
    return Field(p, k)
