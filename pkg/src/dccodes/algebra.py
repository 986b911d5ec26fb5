"""Finite-field and polynomial arithmetic.

Everything downstream builds on this module: prime fields F_q with int-valued
elements, dense univariate polynomials in low-degree-first order, binary
extension fields GF(2^m) on bitmask ints, and the quotient ring
F_q[x] / (1 + x + ... + x^(k-1)), which is a field exactly when k is prime
and q is a primitive root mod k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterator, Sequence

# Degree of the zero polynomial: compares below every integer.
NEG_INF = float("-inf")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimeField:
    """The field F_q for prime q. Elements are ints in range(q)."""

    q: int

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise ValueError(f"field size must be prime, got {self.q}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.q - 2, self.q)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.q, self)

    def elements(self) -> range:
        return range(self.q)


@dataclass(frozen=True)
class FieldElement:
    """A value paired with its field, for call sites that want operator syntax.

    Most internal code passes bare ints plus a PrimeField; this wrapper exists
    for the public arithmetic entry point and for small scripts.
    """

    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"value {self.value} out of range for F_{self.field.q}")

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise ValueError("elements from different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field.mul(self.value, other.value), self.field)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field.neg(self.value), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def __int__(self) -> int:
        return self.value


def field_arithmetic(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch one field operation by name.

    op is one of "add", "sub", "mul", "inv", "neg". The unary ops ("inv",
    "neg") ignore b, which may be None. Division by zero raises
    ZeroDivisionError; mismatched fields raise ValueError.
    """
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"binary op {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over a prime field, coefficients low degree first.

    The representation is canonical: coefficients are reduced mod q and
    trailing zeros are stripped, so the zero polynomial is the empty tuple
    and equality is plain tuple equality. degree of the zero polynomial is
    NEG_INF, which compares below every int.
    """

    coeffs: tuple[int, ...]
    field: PrimeField

    def __post_init__(self) -> None:
        q = self.field.q
        c = [v % q for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        s = self.field.inv(lc)
        return Polynomial(tuple(v * s for v in self.coeffs), self.field)

    def padded(self, length: int) -> tuple[int, ...]:
        """Coefficients padded with zeros up to the given length."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree too high to pad to length {length}")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.field.q
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(tuple(out), self.field)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, v in enumerate(other.coeffs):
            out[i] -= v
        return Polynomial(tuple(out), self.field)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        return poly_divmod(self, other)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[0]

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    @classmethod
    def zero(cls, field: PrimeField) -> "Polynomial":
        return cls((), field)

    @classmethod
    def one(cls, field: PrimeField) -> "Polynomial":
        return cls((1,), field)

    @classmethod
    def x_power(cls, field: PrimeField, e: int) -> "Polynomial":
        return cls((0,) * e + (1,), field)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    if f.is_zero() or g.is_zero():
        return Polynomial.zero(f.field)
    q = f.field.q
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = (out[i + j] + a * b) % q
    return Polynomial(tuple(out), f.field)


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder with deg(remainder) < deg(g).

    Raises ZeroDivisionError when g is zero.
    """
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = f.field.q
    dg = len(g.coeffs) - 1
    rem = list(f.coeffs)
    if len(rem) <= dg:
        return Polynomial.zero(f.field), f
    quot = [0] * (len(rem) - dg)
    inv_lc = f.field.inv(g.coeffs[-1])
    for top in range(len(rem) - 1, dg - 1, -1):
        c = rem[top] % q
        if c == 0:
            continue
        factor = (c * inv_lc) % q
        quot[top - dg] = factor
        for j, gv in enumerate(g.coeffs):
            rem[top - dg + j] = (rem[top - dg + j] - factor * gv) % q
    return Polynomial(tuple(quot), f.field), Polynomial(tuple(rem[:dg]), f.field)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    f._check(g)
    while not g.is_zero():
        f, g = g, f % g
    return f if f.is_zero() else f.monic()


def poly_reverse(h: Polynomial, k: int) -> Polynomial:
    """Coefficient reversal at degree bound k: x^k * h(1/x).

    The coefficient sequence is padded to length k+1, reversed, and
    re-canonicalized. Applying the same bound twice is the identity.
    """
    if h.degree > k:
        raise ValueError(f"degree {h.degree} exceeds reversal bound {k}")
    if k < 0:
        raise ValueError("reversal bound must be non-negative")
    return Polynomial(tuple(reversed(h.padded(k + 1))), h.field)


def cyclic_mul(a: Polynomial, m: Polynomial, k: int) -> tuple[int, ...]:
    """Coefficient vector of a(x)*m(x) mod x^k - 1, as a length-k tuple.

    This equals the product of the k x k circulant matrix whose first column
    holds the coefficients of a with the coefficient vector of m.
    """
    a._check(m)
    if a.degree >= k or m.degree >= k:
        raise ValueError(f"operands must have degree below {k}")
    q = a.field.q
    out = [0] * k
    for i, av in enumerate(a.coeffs):
        if av == 0:
            continue
        for j, mv in enumerate(m.coeffs):
            if mv:
                idx = i + j
                if idx >= k:
                    idx -= k
                out[idx] = (out[idx] + av * mv) % q
    return tuple(out)


# ---------------------------------------------------------------------------
# Irreducibility and primitive roots
# ---------------------------------------------------------------------------


def _pow_mod(base: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    result = Polynomial.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = poly_mul(result, base) % mod
        base = poly_mul(base, base) % mod
        e >>= 1
    return result


def poly_irreducible(f: Polynomial) -> bool:
    """Decide whether f is irreducible over its prime field.

    f is reducible iff it shares a factor with x^(q^d) - x for some
    d <= deg(f)/2, since that product covers exactly the irreducibles of
    degree dividing d. Checking gcd(f, x^(q^d) - x) for every such d is
    therefore the same test as trial division by all monic polynomials of
    degree up to deg(f)/2, done in batches.
    """
    deg = f.degree
    if deg < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    if deg == 1:
        return True
    f = f.monic()
    q = f.field.q
    x = Polynomial.x_power(f.field, 1)
    u = x
    for _ in range(deg // 2):
        u = _pow_mod(u, q, f)
        if poly_gcd(f, u - x).degree != 0:
            return False
    return True


def _irreducible_by_trial_division(f: Polynomial) -> bool:
    # Literal scan over all monic divisor candidates up to half degree.
    # Exponential in the degree; kept as a cross-check oracle for tests.
    deg = f.degree
    if deg < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    q = f.field.q
    for d in range(1, deg // 2 + 1):
        for idx in range(q**d):
            coeffs = []
            v = idx
            for _ in range(d):
                coeffs.append(v % q)
                v //= q
            cand = Polynomial(tuple(coeffs) + (1,), f.field)
            if (f % cand).is_zero():
                return False
    return True


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in the multiplicative group mod n; requires gcd(a, n) = 1."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    v = a % n
    order = 1
    while v != 1:
        v = v * a % n
        order += 1
    return order


def is_primitive_root(q: int, k: int) -> bool:
    """Whether q generates the multiplicative group mod the prime k."""
    if not is_prime(k):
        raise ValueError(f"modulus must be prime, got {k}")
    if math.gcd(q, k) != 1:
        return False
    for p in prime_factors(k - 1):
        if pow(q, (k - 1) // p, k) == 1:
            return False
    return True


def find_wozencraft_k(q: int, k_min: int, search_limit: int = 10**6) -> int:
    """Smallest prime k >= k_min such that q is a primitive root mod k.

    For such k the all-degrees-below-k polynomial 1 + x + ... + x^(k-1) is
    irreducible over F_q, so the quotient ring by it is a field. Raises
    LookupError when no such k exists up to search_limit.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if k_min < 2:
        raise ValueError("k_min must be at least 2")
    k = k_min
    while k <= search_limit:
        if is_prime(k) and math.gcd(q, k) == 1 and is_primitive_root(q, k):
            return k
        k += 1
    raise LookupError(
        f"no prime k in [{k_min}, {search_limit}] has {q} as a primitive root"
    )


# ---------------------------------------------------------------------------
# GF(2^m)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryExtensionField:
    """GF(2^m) with elements as bitmask ints; bit i is the coefficient of x^i.

    modulus is the irreducible degree-m polynomial defining the field and
    generator is an element of multiplicative order 2^m - 1. Both are
    re-verified at construction.
    """

    m: int
    modulus: Polynomial
    generator: int
    _mod_int: int = dc_field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.modulus.degree != self.m or not poly_irreducible(self.modulus):
            raise ValueError("modulus must be irreducible of degree m")
        object.__setattr__(
            self, "_mod_int", sum(c << i for i, c in enumerate(self.modulus.coeffs))
        )
        order = (1 << self.m) - 1
        if not 0 < self.generator < (1 << self.m):
            raise ValueError("generator out of range")
        if self.element_order(self.generator) != order:
            raise ValueError("generator does not have full multiplicative order")

    @property
    def size(self) -> int:
        return 1 << self.m

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        res = 0
        top = 1 << self.m
        while b:
            if b & 1:
                res ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self._mod_int
        return res

    def pow(self, a: int, e: int) -> int:
        res = 1
        a %= 1 << self.m  # no-op guard; elements already fit
        while e:
            if e & 1:
                res = self.mul(res, a)
            a = self.mul(a, a)
            e >>= 1
        return res

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = (1 << self.m) - 1
        order = n
        for p in prime_factors(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    def coeff_vector(self, a: int) -> tuple[int, ...]:
        """The m coefficients of a over F_2, low degree first."""
        return tuple((a >> i) & 1 for i in range(self.m))

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        return sum((c & 1) << i for i, c in enumerate(coeffs))

    def elements(self) -> range:
        return range(1 << self.m)


@lru_cache(maxsize=None)
def build_gf2m(m: int) -> BinaryExtensionField:
    """GF(2^m) with a deterministic modulus and generator.

    The modulus is the lexicographically least irreducible monic polynomial of
    degree m with nonzero constant term, comparing coefficient tuples low
    degree first as binary ints (the constant term is the lowest bit); the
    generator is the least element of full multiplicative order.
    """
    if not 1 <= m <= 20:
        raise ValueError("m must be in 1..20")
    f2 = PrimeField(2)
    modulus = None
    # Only odd ints encode candidates: a zero constant term means x divides
    # the polynomial, and the convention requires a nonzero constant term.
    for c in range(1, 1 << m, 2):
        cand = Polynomial(tuple((c >> i) & 1 for i in range(m)) + (1,), f2)
        if poly_irreducible(cand):
            modulus = cand
            break
    if modulus is None:
        raise AssertionError(f"no irreducible polynomial of degree {m} found")
    order = (1 << m) - 1
    generator = 1
    if m > 1:
        probe = _GF2Raw(m, sum(c << i for i, c in enumerate(modulus.coeffs)))
        for g in range(2, 1 << m):
            if probe.order(g) == order:
                generator = g
                break
    return BinaryExtensionField(m, modulus, generator)


class _GF2Raw:
    # Minimal unchecked GF(2^m) used only while searching for a generator,
    # before a validated BinaryExtensionField can exist.
    def __init__(self, m: int, mod_int: int):
        self.m = m
        self.mod_int = mod_int

    def mul(self, a: int, b: int) -> int:
        res = 0
        top = 1 << self.m
        while b:
            if b & 1:
                res ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.mod_int
        return res

    def pow(self, a: int, e: int) -> int:
        res = 1
        while e:
            if e & 1:
                res = self.mul(res, a)
            a = self.mul(a, a)
            e >>= 1
        return res

    def order(self, a: int) -> int:
        n = (1 << self.m) - 1
        order = n
        for p in prime_factors(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order


# ---------------------------------------------------------------------------
# The quotient ring F_q[x] / (1 + x + ... + x^(k-1))
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientFieldContext:
    """The field H = F_q[x] / p_k(x) with p_k = 1 + x + ... + x^(k-1).

    Requires k prime and q a primitive root mod k; p_k is additionally
    verified irreducible at construction. Elements are coefficient tuples of
    length k-1.
    """

    q: int
    k: int
    field: PrimeField = dc_field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "field", PrimeField(self.q))
        if not is_prime(self.k):
            raise ValueError(f"k must be prime, got {self.k}")
        if math.gcd(self.q, self.k) != 1:
            raise ValueError(f"q={self.q} and k={self.k} must be coprime")
        if not is_primitive_root(self.q, self.k):
            raise ValueError(f"{self.q} is not a primitive root mod {self.k}")
        if not poly_irreducible(self.p_k()):
            # Unreachable when the primitive-root check passes; kept as a
            # hard guarantee because everything downstream assumes a field.
            raise ValueError(f"p_{self.k} is not irreducible over F_{self.q}")

    def p_k(self) -> Polynomial:
        return Polynomial((1,) * self.k, self.field)

    def zero(self) -> tuple[int, ...]:
        return (0,) * (self.k - 1)

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.k - 2)

    def lift(self, element: Sequence[int]) -> Polynomial:
        if len(element) != self.k - 1:
            raise ValueError(f"element must have length {self.k - 1}")
        return Polynomial(tuple(element), self.field)

    def elements(self) -> Iterator[tuple[int, ...]]:
        import itertools

        return (
            tuple(reversed(digits))
            for digits in itertools.product(range(self.q), repeat=self.k - 1)
        )


def reduce_mod_pk(f: Polynomial, ctx: QuotientFieldContext) -> tuple[int, ...]:
    """Remainder of f modulo p_k, as a length-(k-1) coefficient tuple.

    Uses the identity x^(k-1) = -(1 + x + ... + x^(k-2)) mod p_k: pad f to
    length k, subtract the top coefficient from every position, drop the top.
    """
    if f.degree >= ctx.k:
        raise ValueError(f"degree must be below {ctx.k}")
    padded = f.padded(ctx.k)
    last = padded[-1]
    q = ctx.q
    return tuple((c - last) % q for c in padded[: ctx.k - 1])


def quotient_mul(
    u: Sequence[int], v: Sequence[int], ctx: QuotientFieldContext
) -> tuple[int, ...]:
    """Product of two elements of H = F_q[x]/p_k.

    Computed by multiplying mod x^k - 1 first and then reducing; p_k divides
    x^k - 1, so the composite agrees with direct reduction mod p_k.
    """
    fu = ctx.lift(u)
    fv = ctx.lift(v)
    w = cyclic_mul(fu, fv, ctx.k)
    return reduce_mod_pk(Polynomial(w, ctx.field), ctx)
