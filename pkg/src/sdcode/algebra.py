"""Arithmetic contexts for code symbols.

Two kinds of context are supported:

* ``Field``: the binary extension field GF(2^w), 2 <= w <= 16, defined by
  an irreducible polynomial of degree w.
* ``Ring``: binary polynomials modulo M_p(x) = 1 + x + ... + x^(p-1) for an
  odd prime p.  M_p(x) need not be irreducible, so the ring may contain
  zero divisors; unit testing goes through gcd with M_p(x) and bulk linear
  algebra goes through the factorization of M_p(x) into irreducibles.

Elements are bit vectors packed into ints (bit k = coefficient of x^k),
wrapped in :class:`Element` so that mixing contexts is detected.  In both
contexts ``alpha`` is the residue of x; in a field its multiplicative
order divides 2^w - 1, in the ring it is exactly p, with the defining
identity alpha^(p-1) = 1 + alpha + ... + alpha^(p-2).

Field multiplication uses log/antilog tables built on a primitive element
(found by search, since the residue of x need not generate the whole
multiplicative group); verification workloads perform millions of
multiplications, so the table path matters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from math import gcd as int_gcd

from . import _gf2poly as poly
from .errors import (
    AlgebraMismatchError,
    BadWidthError,
    NotAUnitError,
    NotPrimeError,
    ReducibleModulusError,
)

# Published irreducible (and primitive) polynomials, one per width.
# Callers may override; these defaults keep O(alpha) = 2^w - 1.
DEFAULT_FIELD_POLY: dict[int, int] = {
    2: 0x7,        # x^2+x+1
    3: 0xB,        # x^3+x+1
    4: 0x13,       # x^4+x+1
    5: 0x25,       # x^5+x^2+1
    6: 0x43,       # x^6+x+1
    7: 0x89,       # x^7+x^3+1
    8: 0x11D,      # x^8+x^4+x^3+x^2+1
    9: 0x211,      # x^9+x^4+1
    10: 0x409,     # x^10+x^3+1
    11: 0x805,     # x^11+x^2+1
    12: 0x1053,    # x^12+x^6+x^4+x+1
    13: 0x201B,    # x^13+x^4+x^3+x+1
    14: 0x4443,    # x^14+x^10+x^6+x+1
    15: 0x8003,    # x^15+x+1
    16: 0x1100B,   # x^16+x^12+x^3+x+1
}

_TABLE_DEGREE_MAX = 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24 with the bases above
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _order_of_2_mod(p: int) -> int:
    """Multiplicative order of 2 in GF(p)."""
    order = p - 1
    for q in poly._prime_factors(p - 1):
        while order % q == 0 and pow(2, order // q, p) == 1:
            order //= q
    return order


class _Gf2mOps:
    """Arithmetic in GF(2)[x]/(f) for irreducible f, on raw ints.

    Log/antilog tables are built for degrees up to 16; beyond that the
    carry-less fallback is used (only reachable through ring factor
    fields for large p).
    """

    __slots__ = ("modulus", "degree", "q", "qm1", "has_tables", "exp", "log",
                 "_exp_np", "_log_np")

    def __init__(self, modulus: int):
        self.modulus = modulus
        self.degree = poly.degree(modulus)
        self.q = 1 << self.degree
        self.qm1 = self.q - 1
        self.has_tables = self.degree <= _TABLE_DEGREE_MAX
        self._exp_np = None
        self._log_np = None
        if self.has_tables:
            g = self._find_generator()
            exp = [0] * (2 * self.qm1 - 1)
            log = [0] * self.q
            v = 1
            for i in range(self.qm1):
                exp[i] = v
                log[v] = i
                v = poly.mulmod(v, g, modulus)
            for i in range(self.qm1, 2 * self.qm1 - 1):
                exp[i] = exp[i - self.qm1]
            self.exp = exp
            self.log = log
        else:
            self.exp = None
            self.log = None

    def _find_generator(self) -> int:
        primes = poly._prime_factors(self.qm1)
        c = 2
        while True:
            if all(poly.powmod(c, self.qm1 // rho, self.modulus) != 1 for rho in primes):
                return c
            c += 1

    def element_order(self, a: int) -> int:
        """Multiplicative order of nonzero a."""
        if self.has_tables:
            return self.qm1 // int_gcd(self.qm1, self.log[a])
        order = self.qm1
        for q in poly._prime_factors(self.qm1):
            while order % q == 0 and poly.powmod(a, order // q, self.modulus) == 1:
                order //= q
        return order

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return self.exp[self.log[a] + self.log[b]]
        return poly.mulmod(a, b, self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.has_tables:
            return self.exp[self.qm1 - self.log[a]]
        return poly.invmod(a, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        if self.has_tables:
            return self.exp[(self.log[a] * e) % self.qm1]
        if e < 0:
            a = self.inv(a)
            e = -e
        return poly.powmod(a, e, self.modulus)

    def np_tables(self):
        """(exp, log) as int32 numpy arrays, or None when table-less."""
        if not self.has_tables:
            return None
        if self._exp_np is None:
            import numpy as np

            self._exp_np = np.asarray(self.exp, dtype=np.int32)
            self._log_np = np.asarray(self.log, dtype=np.int32)
        return self._exp_np, self._log_np


@dataclass(frozen=True, slots=True)
class Element:
    """One symbol: a fixed-width bit vector tied to its algebra."""

    algebra: "Algebra"
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.algebra.element_bits):
            raise ValueError(f"bits 0x{self.bits:x} out of range for {self.algebra}")

    def __add__(self, other: "Element") -> "Element":
        return self.algebra.add(self, other)

    __xor__ = __add__

    def __mul__(self, other: "Element") -> "Element":
        return self.algebra.mul(self, other)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"Element({self.algebra.element_token(self)!r}, {self.algebra})"


class Algebra:
    """Common surface of Field and Ring.  Instances are immutable and
    compare by their defining parameters, so independently constructed
    contexts interoperate."""

    kind: str
    element_bits: int

    # -- element plumbing ------------------------------------------------

    def element(self, bits: int) -> Element:
        return Element(self, bits)

    @property
    def zero(self) -> Element:
        return Element(self, 0)

    @property
    def one(self) -> Element:
        return Element(self, 1)

    @property
    def alpha(self) -> Element:
        return Element(self, 2)

    def _check(self, a: Element) -> int:
        if not isinstance(a, Element):
            raise TypeError(f"expected Element, got {type(a).__name__}")
        if a.algebra != self:
            raise AlgebraMismatchError(f"element of {a.algebra} used with {self}")
        return a.bits

    # -- arithmetic ------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        return Element(self, self._check(a) ^ self._check(b))

    def mul(self, a: Element, b: Element) -> Element:
        return Element(self, self.mul_bits(self._check(a), self._check(b)))

    def inv(self, a: Element) -> Element:
        return Element(self, self.inv_bits(self._check(a)))

    def is_unit(self, a: Element) -> bool:
        return self.is_unit_bits(self._check(a))

    def alpha_pow(self, k: int) -> Element:
        return Element(self, self.alpha_pow_bits(k))

    def add_bits(self, a: int, b: int) -> int:
        return a ^ b

    def mul_bits(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv_bits(self, a: int) -> int:
        raise NotImplementedError

    def is_unit_bits(self, a: int) -> bool:
        raise NotImplementedError

    def alpha_pow_bits(self, k: int) -> int:
        raise NotImplementedError

    def order_of_alpha(self) -> int:
        raise NotImplementedError

    # -- text forms ------------------------------------------------------

    def descriptor(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.descriptor()

    def _alpha_exponent_of(self, bits: int) -> int | None:
        """k with alpha^k == bits, or None if bits is not a power of alpha."""
        raise NotImplementedError

    def element_token(self, e: Element) -> str:
        """Render an element: 0, 1, a^k for powers of alpha, x:<hex> otherwise."""
        bits = self._check(e)
        if bits == 0:
            return "0"
        if bits == 1:
            return "1"
        k = self._alpha_exponent_of(bits)
        if k is not None:
            return f"a^{k}"
        return f"x:{bits:x}"

    def parse_element(self, token: str) -> Element:
        """Inverse of element_token; raises ValueError on bad tokens."""
        if token == "0":
            return self.zero
        if token == "1":
            return self.one
        if token.startswith("a^"):
            try:
                k = int(token[2:])
            except ValueError:
                raise ValueError(f"bad exponent in token {token!r}") from None
            return self.alpha_pow(k)
        if token.startswith("x:"):
            body = token[2:]
            if body.startswith(("0x", "0X")):
                body = body[2:]
            try:
                bits = int(body, 16)
            except ValueError:
                raise ValueError(f"bad hex in token {token!r}") from None
            if not 0 <= bits < (1 << self.element_bits):
                raise ValueError(f"token {token!r} out of range for {self}")
            return self.element(bits)
        raise ValueError(f"unrecognized element token {token!r}")


class Field(Algebra):
    """GF(2^w) defined by an irreducible polynomial of degree w."""

    kind = "field"

    def __init__(self, w: int, modulus: int | None = None):
        if not 2 <= w <= 16:
            raise BadWidthError(f"field width must be in [2, 16], got {w}")
        if modulus is None:
            modulus = DEFAULT_FIELD_POLY[w]
        if poly.degree(modulus) != w:
            raise BadWidthError(
                f"modulus 0x{modulus:x} has degree {poly.degree(modulus)}, expected {w}")
        if not poly.is_irreducible(modulus):
            raise ReducibleModulusError(f"0x{modulus:x} is reducible over GF(2)")
        self.w = w
        self.modulus = modulus
        self.element_bits = w
        self.ops = _Gf2mOps(modulus)
        self._log_alpha = self.ops.log[2]
        self._alpha_order = self.ops.qm1 // int_gcd(self.ops.qm1, self._log_alpha)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.w, self.modulus) == (other.w, other.modulus)

    def __hash__(self) -> int:
        return hash(("field", self.w, self.modulus))

    def mul_bits(self, a: int, b: int) -> int:
        return self.ops.mul(a, b)

    def inv_bits(self, a: int) -> int:
        if a == 0:
            raise NotAUnitError("zero is not invertible")
        return self.ops.inv(a)

    def is_unit_bits(self, a: int) -> bool:
        return a != 0

    def alpha_pow_bits(self, k: int) -> int:
        e = k % self._alpha_order
        return self.ops.exp[(e * self._log_alpha) % self.ops.qm1]

    def order_of_alpha(self) -> int:
        return self._alpha_order

    def _alpha_exponent_of(self, bits: int) -> int | None:
        lg = self.ops.log[bits]
        la = self._log_alpha
        # alpha^k = g^(k*la): solvable iff gcd(la, q-1) divides lg
        d = int_gcd(la, self.ops.qm1)
        if lg % d:
            return None
        # solve k*la == lg (mod q-1)
        m = self.ops.qm1 // d
        k = (lg // d) * pow(la // d, -1, m) % m
        return k

    def descriptor(self) -> str:
        return f"field w={self.w} poly=0x{self.modulus:x}"


class Ring(Algebra):
    """Binary polynomials modulo M_p(x) = 1 + x + ... + x^(p-1), p an odd
    prime.  Residues have degree <= p-2 and are stored as (p-1)-bit
    vectors; reduction substitutes x^(p-1) <- 1 + x + ... + x^(p-2).
    """

    kind = "ring"

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0 or not _is_prime(p):
            raise NotPrimeError(f"p must be an odd prime, got {p}")
        self.p = p
        self.modulus = (1 << p) - 1          # M_p(x), degree p-1
        self.element_bits = p - 1
        self.all_ones = (1 << (p - 1)) - 1   # the residue of x^(p-1)
        self._fact: MpFactorization | None = None
        self._factor_ops: list[_Gf2mOps] | None = None
        self._crt_basis: list[int] | None = None

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("ring", self.p))

    def mul_bits(self, a: int, b: int) -> int:
        return poly.mulmod(a, b, self.modulus)

    def inv_bits(self, a: int) -> int:
        d, s, _ = poly.gcdext(a, self.modulus)
        if d != 1:
            raise NotAUnitError(
                f"gcd with M_{self.p}(x) is 0x{d:x}; element is not a unit")
        return poly.mod(s, self.modulus)

    def is_unit_bits(self, a: int) -> bool:
        return poly.gcd(a, self.modulus) == 1

    def alpha_pow_bits(self, k: int) -> int:
        e = k % self.p
        return self.all_ones if e == self.p - 1 else 1 << e

    def order_of_alpha(self) -> int:
        return self.p

    def _alpha_exponent_of(self, bits: int) -> int | None:
        if bits == self.all_ones:
            return self.p - 1
        if bits & (bits - 1) == 0:          # monomial x^k
            return bits.bit_length() - 1
        return None

    def descriptor(self) -> str:
        return f"ring p={self.p}"

    # -- factor-field machinery -------------------------------------------

    @property
    def factorization(self) -> "MpFactorization":
        if self._fact is None:
            self._fact = mp_factorization(self.p)
        return self._fact

    @property
    def factor_ops(self) -> list[_Gf2mOps]:
        if self._factor_ops is None:
            self._factor_ops = [_Gf2mOps(f) for f in self.factorization.factors]
        return self._factor_ops

    def project_bits(self, bits: int, k: int) -> int:
        """Residue of bits modulo the k-th irreducible factor of M_p(x)."""
        return poly.mod(bits, self.factorization.factors[k])

    def crt_bits(self, residues: list[int]) -> int:
        """Unique residue mod M_p(x) matching one residue per factor."""
        if self._crt_basis is None:
            basis = []
            for f in self.factorization.factors:
                q, rem = poly.divmod_(self.modulus, f)
                assert rem == 0
                t = poly.mulmod(q, poly.invmod(poly.mod(q, f), f), self.modulus)
                basis.append(t)
            self._crt_basis = basis
        out = 0
        for res, t in zip(residues, self._crt_basis):
            out ^= poly.mulmod(res, t, self.modulus)
        return out


@dataclass(frozen=True, slots=True)
class MpFactorization:
    """Complete factorization of M_p(x) into irreducibles over GF(2).

    All factors have degree equal to the multiplicative order of 2 mod p,
    and M_p(x) is squarefree for odd prime p, so the factors are pairwise
    coprime.
    """

    p: int
    factors: tuple[int, ...]

    @property
    def factor_degree(self) -> int:
        return poly.degree(self.factors[0])

    def product(self) -> int:
        return reduce(poly.mul, self.factors, 1)


def _equal_degree_split(f: int, d: int, rng: random.Random) -> list[int]:
    """Split a squarefree product of degree-d irreducibles into its factors
    (Cantor-Zassenhaus with the GF(2) trace map)."""
    n = poly.degree(f)
    if n == d:
        return [f]
    while True:
        u = rng.randrange(1, 1 << n)
        v, t = 0, u
        for _ in range(d):
            v ^= t
            t = poly.mulmod(t, t, f)
        for cand in (v, v ^ 1):
            g = poly.gcd(f, cand)
            if 0 < poly.degree(g) < n:
                q, rem = poly.divmod_(f, g)
                assert rem == 0
                return _equal_degree_split(g, d, rng) + _equal_degree_split(q, d, rng)


def mp_factorization(p: int) -> MpFactorization:
    """Factor M_p(x) = 1 + x + ... + x^(p-1) into irreducibles.

    M_p(x) is irreducible exactly when 2 is primitive mod p; otherwise it
    splits into (p-1)/d irreducibles of degree d = order of 2 mod p.
    """
    if p < 3 or p % 2 == 0 or not _is_prime(p):
        raise NotPrimeError(f"p must be an odd prime, got {p}")
    m = (1 << p) - 1
    d = _order_of_2_mod(p)
    if d == p - 1:
        return MpFactorization(p, (m,))
    # deterministic split choices so factor order is reproducible
    rng = random.Random(0x5DC0DE ^ p)
    factors = sorted(_equal_degree_split(m, d, rng))
    fact = MpFactorization(p, tuple(factors))
    assert fact.product() == m and all(poly.degree(f) == d for f in factors)
    return fact


_FIELD_CACHE: dict[tuple[int, int], Field] = {}
_RING_CACHE: dict[int, Ring] = {}


def make_field(w: int, modulus: int | None = None) -> Field:
    """Field context for GF(2^w); modulus defaults to a published
    irreducible polynomial per width."""
    key = (w, DEFAULT_FIELD_POLY.get(w, 0) if modulus is None else modulus)
    ctx = _FIELD_CACHE.get(key)
    if ctx is None:
        ctx = Field(w, modulus)
        _FIELD_CACHE[key] = ctx
    return ctx


def make_ring(p: int) -> Ring:
    """Ring context for binary polynomials modulo M_p(x)."""
    ctx = _RING_CACHE.get(p)
    if ctx is None:
        ctx = Ring(p)
        _RING_CACHE[p] = ctx
    return ctx


def parse_algebra(text: str) -> Algebra:
    """Parse a descriptor token: 'field w=<int> poly=0x<hex>' or 'ring p=<int>'."""
    parts = text.split()
    if not parts:
        raise ValueError("empty algebra descriptor")
    kv = {}
    for part in parts[1:]:
        if "=" not in part:
            raise ValueError(f"bad algebra descriptor item {part!r}")
        k, v = part.split("=", 1)
        kv[k] = v
    if parts[0] == "field":
        if set(kv) != {"w", "poly"}:
            raise ValueError(f"field descriptor needs w= and poly=, got {text!r}")
        return make_field(int(kv["w"]), int(kv["poly"], 16))
    if parts[0] == "ring":
        if set(kv) != {"p"}:
            raise ValueError(f"ring descriptor needs p=, got {text!r}")
        return make_ring(int(kv["p"]))
    raise ValueError(f"unknown algebra kind {parts[0]!r}")
