"""Cyclic codes via generator polynomials.

A cyclic code of length n over F_q is an ideal of F_q[x]/(x^n - 1) and is
determined by its unique monic generator g dividing x^n - 1. The dual is
again cyclic, generated by the coefficient reversal of the check polynomial
h = (x^n - 1)/g. Codes may carry decoder plug-ins so downstream
constructions can compose them without knowing how they decode.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional, Sequence

import numpy as np

from .algebra import (
    Polynomial,
    PrimeField,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_reverse,
)
from .code_core import DecodeOutcome, GeneratorMatrixCode, _rref

# A decoder plug-in receives a word and a strict rational radius and returns
# Decoded or FAIL. The radius is the caller's promise about the error weight.
CyclicDecoder = Callable[[Sequence[int], Fraction], DecodeOutcome]


def _x_n_minus_1(field: PrimeField, n: int) -> Polynomial:
    return Polynomial((-1,) + (0,) * (n - 1) + (1,), field)


@dataclass(frozen=True)
class CyclicCode:
    """Length-n cyclic code over F_q with monic generator g | x^n - 1.

    h is derived at construction and satisfies g*h = x^n - 1. The optional
    decoder/dual_decoder fields decode this code and its dual respectively;
    they do not participate in equality.
    """

    q: int
    n: int
    g: Polynomial
    h: Polynomial = dc_field(init=False)
    decoder: Optional[CyclicDecoder] = dc_field(
        default=None, compare=False, repr=False
    )
    dual_decoder: Optional[CyclicDecoder] = dc_field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        field = PrimeField(self.q)
        if self.n < 1:
            raise ValueError("length must be positive")
        if self.g.field != field:
            raise ValueError("generator field does not match q")
        if self.g.is_zero() or self.g.leading_coefficient() != 1:
            raise ValueError("generator must be monic")
        quot, rem = poly_divmod(_x_n_minus_1(field, self.n), self.g)
        if not rem.is_zero():
            raise ValueError(f"{self.g.coeffs} does not divide x^{self.n} - 1")
        object.__setattr__(self, "h", quot)

    @property
    def k(self) -> int:
        return self.n - int(self.g.degree)

    @property
    def field(self) -> PrimeField:
        return self.g.field

    @cached_property
    def generator_code(self) -> GeneratorMatrixCode:
        """Matrix view: columns are the coefficients of g(x)*x^i, i < k."""
        cols = []
        for i in range(self.k):
            shifted = Polynomial((0,) * i + self.g.coeffs, self.field)
            cols.append(shifted.padded(self.n))
        return GeneratorMatrixCode(self.q, cols, n=self.n)

    def with_decoders(
        self,
        decoder: Optional[CyclicDecoder],
        dual_decoder: Optional[CyclicDecoder],
    ) -> "CyclicCode":
        return dataclasses.replace(
            self, decoder=decoder, dual_decoder=dual_decoder
        )


def cyclic_from_generator(q: int, n: int, g: Polynomial) -> CyclicCode:
    return CyclicCode(q, n, g)


def dual_code(c: CyclicCode) -> CyclicCode:
    """The dual, generated by the reversal of h at degree bound k = dim(C)."""
    rev = poly_reverse(c.h, c.k)
    return CyclicCode(c.q, c.n, rev.monic())


def reverse_code(c: CyclicCode) -> CyclicCode:
    """The code of reversed codewords, generated by g reversed at deg(g)."""
    rev = poly_reverse(c.g, int(c.g.degree))
    return CyclicCode(c.q, c.n, rev.monic())


def generator_from_spanning_set(
    q: int, n: int, words: Sequence[Sequence[int]]
) -> CyclicCode:
    """The cyclic code whose codeword set is the span of the given words.

    The span must already be closed under cyclic shift; if any shifted basis
    vector falls outside the span this raises ValueError. The generator is
    gcd(x^n - 1, gcd of the word polynomials), and the dimension is checked
    against the span's rank so a non-ideal span can never slip through.
    """
    field = PrimeField(q)
    mat = np.array([[int(v) % q for v in w] for w in words], dtype=np.int64)
    if mat.ndim != 2 or mat.shape[1] != n:
        raise ValueError(f"words must all have length {n}")
    rref, piv, _ = _rref(mat, q)
    rank = len(piv)
    basis = rref[:rank]
    for row in basis:
        shifted = np.roll(row, 1)
        stacked = np.vstack([basis, shifted])
        _, piv2, _ = _rref(stacked, q)
        if len(piv2) != rank:
            raise ValueError("span is not closed under cyclic shift")
    g = _x_n_minus_1(field, n)
    for w in words:
        g = poly_gcd(g, Polynomial(tuple(int(v) for v in w), field))
    code = CyclicCode(q, n, g.monic())
    if code.k != rank:
        # cannot happen once shift-closure holds; guards the gcd reduction
        raise AssertionError("span rank disagrees with generator degree")
    return code


def factor_x_n_minus_1(q: int, n: int) -> list[tuple[Polynomial, int]]:
    """Irreducible factorization of x^n - 1 over F_q, with multiplicities.

    Trial division in increasing candidate degree; any composite candidate
    has a smaller-degree factor that was already divided out, so each
    recorded factor is irreducible. n is capped at 24 to keep the candidate
    scan honest about its exponential cost.
    """
    if not 1 <= n <= 24:
        raise ValueError("n must be in 1..24")
    field = PrimeField(q)
    f = _x_n_minus_1(field, n)
    factors: list[tuple[Polynomial, int]] = []
    deg = 1
    while f.degree >= 1:
        if deg > f.degree:
            raise AssertionError("factor scan exceeded remaining degree")
        for idx in range(q**deg):
            coeffs = []
            v = idx
            for _ in range(deg):
                coeffs.append(v % q)
                v //= q
            cand = Polynomial(tuple(coeffs) + (1,), field)
            mult = 0
            while True:
                quot, rem = poly_divmod(f, cand)
                if not rem.is_zero():
                    break
                f = quot
                mult += 1
            if mult:
                factors.append((cand, mult))
            if f.degree < deg:
                break
        deg += 1
    return factors


def max_irreducible_factor_degree(q: int, n: int) -> int:
    return max(int(p.degree) for p, _ in factor_x_n_minus_1(q, n))


def enumerate_cyclic_codes(q: int, n: int) -> list[CyclicCode]:
    """All cyclic codes of length n over F_q, one per monic divisor of x^n - 1.

    Includes the two trivial codes (g = 1 and g = x^n - 1).
    """
    factors = factor_x_n_minus_1(q, n)
    field = PrimeField(q)
    codes = []
    for exps in itertools.product(*(range(m + 1) for _, m in factors)):
        g = Polynomial.one(field)
        for (p, _), e in zip(factors, exps):
            for _ in range(e):
                g = poly_mul(g, p)
        codes.append(CyclicCode(q, n, g.monic()))
    return codes
