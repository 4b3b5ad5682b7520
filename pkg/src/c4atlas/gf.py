"""Exact arithmetic in GF(p^m) for odd prime powers q = p^m.

Elements are little-endian coefficient tuples of length m with entries in
[0, p).  The modulus is always the lexicographically smallest monic
irreducible polynomial of its degree, so each supported field has exactly
one representation here and everything built on top is reproducible
bit-for-bit.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

FieldElement = tuple[int, ...]

MAX_ORDER = 1 << 16

# Extension fields up to this order get a full multiplication table.
_TABLE_LIMIT = 512


class NotPrime(ValueError):
    pass


class NotOdd(ValueError):
    pass


class TooLarge(ValueError):
    pass


class ZeroInverse(ZeroDivisionError):
    pass


class SpecMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); polynomials are little-endian int tuples
# ---------------------------------------------------------------------------

def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    k = len(coeffs)
    while k > 0 and coeffs[k - 1] == 0:
        k -= 1
    return coeffs[:k]


def poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = _trim(a)
    b = _trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(tuple(out))


def poly_divmod(
    a: tuple[int, ...], b: tuple[int, ...], p: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Quotient and remainder of a divided by b over GF(p); b nonzero."""
    a = list(_trim(a))
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    if len(a) - 1 < db:
        return (), _trim(tuple(a))
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = (a[i] * inv_lead) % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(tuple(q)), _trim(tuple(a))


def poly_sub(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append((ai - bi) % p)
    return _trim(tuple(out))


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree at most deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1 or poly[-1] != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for lower in product(range(p), repeat=d):
            g = lower + (1,)
            _, r = poly_divmod(poly, g, p)
            if not r:
                return False
    return True


def _poly_ext_gcd(a, b, p):
    """(g, s, t) with s*a + t*b = g over GF(p)."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, p), p)
    return r0, s0, t0


# ---------------------------------------------------------------------------
# field spec
# ---------------------------------------------------------------------------

class FieldSpec:
    """GF(p^m) with a fixed irreducible modulus.

    All operations are pure; specs and elements are immutable values and
    safe to share between any number of workers.
    """

    __slots__ = ("p", "m", "q", "modulus", "_mul_table", "_inv_table")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self._mul_table: dict | None = None
        self._inv_table: dict | None = None

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    # -- element plumbing ---------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return (0,) * self.m

    @property
    def one(self) -> FieldElement:
        return (1,) + (0,) * (self.m - 1)

    def check(self, a: FieldElement) -> FieldElement:
        if (
            not isinstance(a, tuple)
            or len(a) != self.m
            or any(not isinstance(c, int) or not 0 <= c < self.p for c in a)
        ):
            raise SpecMismatch(f"{a!r} is not an element of GF({self.p}^{self.m})")
        return a

    def from_int(self, k: int) -> FieldElement:
        if not 0 <= k < self.q:
            raise SpecMismatch(f"integer code {k} out of range for q={self.q}")
        out = []
        for _ in range(self.m):
            out.append(k % self.p)
            k //= self.p
        return tuple(out)

    def to_int(self, a: FieldElement) -> int:
        self.check(a)
        k = 0
        for c in reversed(a):
            k = k * self.p + c
        return k

    def elements(self) -> Iterator[FieldElement]:
        for k in range(self.q):
            yield self.from_int(k)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self.check(a)
        self.check(b)
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self.check(a)
        self.check(b)
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: FieldElement) -> FieldElement:
        self.check(a)
        p = self.p
        return tuple((-x) % p for x in a)

    def _pad(self, c: tuple[int, ...]) -> FieldElement:
        return c + (0,) * (self.m - len(c))

    def _mul_raw(self, a: FieldElement, b: FieldElement) -> FieldElement:
        prod = poly_mul(a, b, self.p)
        if len(prod) > self.m:
            _, prod = poly_divmod(prod, self.modulus, self.p)
        return self._pad(prod)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self.check(a)
        self.check(b)
        if self.m == 1:
            return ((a[0] * b[0]) % self.p,)
        if self.q <= _TABLE_LIMIT:
            if self._mul_table is None:
                table = {}
                elems = list(self.elements())
                for x in elems:
                    for y in elems:
                        table[(x, y)] = self._mul_raw(x, y)
                self._mul_table = table
            return self._mul_table[(a, b)]
        return self._mul_raw(a, b)

    def inv(self, a: FieldElement) -> FieldElement:
        self.check(a)
        if a == self.zero:
            raise ZeroInverse(f"inverse of zero in GF({self.p}^{self.m})")
        if self._inv_table is not None and a in self._inv_table:
            return self._inv_table[a]
        g, s, _ = _poly_ext_gcd(a, self.modulus, self.p)
        # g is a nonzero constant exactly when a is invertible
        c_inv = pow(g[0], self.p - 2, self.p)
        res = self._pad(_trim(tuple((x * c_inv) % self.p for x in self._pad(s))))
        if len(_trim(res)) > self.m:
            _, red = poly_divmod(res, self.modulus, self.p)
            res = self._pad(red)
        if self._inv_table is None:
            self._inv_table = {}
        self._inv_table[a] = res
        return res

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        self.check(a)
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def make_field(p: int, m: int, max_order: int = MAX_ORDER) -> FieldSpec:
    """Build GF(p^m) with the lexicographically smallest irreducible modulus.

    Deterministic: two calls with the same arguments yield identical specs.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if p == 2:
        raise NotOdd("q must be an odd prime power")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"extension degree m={m} must be a positive integer")
    if p**m > max_order:
        raise TooLarge(f"q = {p}^{m} exceeds the limit {max_order}")
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    for lower in product(range(p), repeat=m):
        candidate = lower + (1,)
        if is_irreducible(candidate, p):
            return FieldSpec(p, m, candidate)
    raise RuntimeError("no irreducible polynomial found (unreachable)")


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q as p^m for prime p, or raise ValueError."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = None
    n = q
    d = 2
    while d * d <= n:
        if n % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return q, 1
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m
