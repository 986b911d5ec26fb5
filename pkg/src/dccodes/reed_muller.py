"""Binary Reed-Muller codes, majority-logic decoding, and punctured variants.

RM(r, m) consists of the evaluation vectors of multilinear polynomials of
degree at most r in m variables over F_2. Point i of the evaluation domain
is the assignment with variable x_j set to bit j of i, and a monomial is
held as the bitmask of its variable set, so "monomial T evaluates to 1 at
point i" is just T & i == T.

Removing the zero point and ordering the remaining points along powers of a
multiplicative generator of GF(2^m) turns RM(r, m) into a cyclic code. That
punctured view, and a decoder for it, is what the double-circulant
construction downstream consumes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import BinaryExtensionField, build_gf2m
from .code_core import (
    FAIL,
    Decoded,
    DecodeOutcome,
    GeneratorMatrixCode,
    Word,
    hamming_distance,
)
from .cyclic import CyclicCode, generator_from_spanning_set


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class RMCode:
    """RM(r, m): monomials are variable-set bitmasks, sorted by degree then
    by bitmask value, which fixes the message coordinate order."""

    def __init__(self, r: int, m: int):
        if not 0 <= r <= m:
            raise ValueError("need 0 <= r <= m")
        if m < 1 or m > 16:
            raise ValueError("m must be in 1..16")
        self.r = r
        self.m = m
        self.n = 1 << m
        self.monomials = tuple(
            sorted(
                (t for t in range(1 << m) if t.bit_count() <= r),
                key=lambda t: (t.bit_count(), t),
            )
        )
        self.k = len(self.monomials)
        self.points = tuple(range(self.n))
        self._gen: GeneratorMatrixCode | None = None

    def monomial_column(self, t: int) -> tuple[int, ...]:
        return tuple(1 if (t & i) == t else 0 for i in range(self.n))

    @property
    def generator_code(self) -> GeneratorMatrixCode:
        if self._gen is None:
            self._gen = GeneratorMatrixCode(
                2, [self.monomial_column(t) for t in self.monomials]
            )
        return self._gen

    def __repr__(self) -> str:
        return f"RMCode(r={self.r}, m={self.m})"


@lru_cache(maxsize=None)
def rm_code(r: int, m: int) -> RMCode:
    return RMCode(r, m)


def rm_encode(code: RMCode, coeffs: Sequence[int]) -> Word:
    """Evaluation vector of the polynomial with the given monomial
    coefficients, in the code's monomial order."""
    if len(coeffs) != code.k:
        raise ValueError(f"need {code.k} coefficients")
    out = [0] * code.n
    for t, c in zip(code.monomials, coeffs):
        if c & 1:
            for i in range(code.n):
                if (t & i) == t:
                    out[i] ^= 1
    return tuple(out)


def reed_decode(code: RMCode, w: Sequence[int]) -> DecodeOutcome:
    """Majority-logic decoding, highest degree layer first.

    The coefficient of a degree-l monomial T equals the sum of the codeword
    over any coset of T's variable subcube, so each of the 2^(m-l) cosets
    casts one vote; below half distance the correct value always has a
    strict majority. Ties vote 0. After each layer the decoded part is
    subtracted. Returns Fail when the final residual reaches weight
    2^(m-r-1), i.e. the word was not within the guaranteed radius.
    """
    if len(w) != code.n:
        raise ValueError(f"word must have length {code.n}")
    working = [v & 1 for v in w]
    full = code.n - 1
    msg: dict[int, int] = {}
    for ell in range(code.r, -1, -1):
        layer = [t for t in code.monomials if t.bit_count() == ell]
        decided: list[tuple[int, int]] = []
        for t in layer:
            comp = full ^ t
            ones = 0
            total = 0
            for u in _submasks(comp):
                s = 0
                for v in _submasks(t):
                    s ^= working[u | v]
                ones += s
                total += 1
            decided.append((t, 1 if 2 * ones > total else 0))
        for t, bit in decided:
            msg[t] = bit
            if bit:
                for i in range(code.n):
                    if (t & i) == t:
                        working[i] ^= 1
    # accept only strictly within half distance: residual < 2^(m-r)/2
    if 2 * sum(working) >= 1 << (code.m - code.r):
        return FAIL
    codeword = tuple((v ^ res) for v, res in zip([v & 1 for v in w], working))
    message = tuple(msg[t] for t in code.monomials)
    return Decoded(codeword, message)


@lru_cache(maxsize=None)
def punctured_ordering(m: int) -> tuple[int, ...]:
    """Evaluation points minus the zero point, ordered as generator powers.

    Point indices double as GF(2^m) elements under the coefficient bitmap,
    so the i-th entry is simply the i-th power of the field generator.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    gf = build_gf2m(m)
    pts = []
    x = 1
    for _ in range((1 << m) - 1):
        pts.append(x)
        x = gf.mul(x, gf.generator)
    if len(set(pts)) != (1 << m) - 1 or x != 1:
        raise AssertionError("generator powers failed to cover the domain")
    return tuple(pts)


class PuncturedRMCode:
    """RM(r, m) with the zero point removed, in generator-power point order."""

    def __init__(
        self,
        r: int,
        m: int,
        field: BinaryExtensionField,
        ordering: tuple[int, ...],
        full: RMCode,
        code: GeneratorMatrixCode,
        cyclic: CyclicCode,
    ):
        self.r = r
        self.m = m
        self.field = field
        self.ordering = ordering
        self.full = full
        self.code = code
        self.cyclic = cyclic
        self.n = (1 << m) - 1

    def puncture(self, full_word: Sequence[int]) -> Word:
        return tuple(full_word[p] for p in self.ordering)

    def __repr__(self) -> str:
        return f"PuncturedRMCode(r={self.r}, m={self.m})"


@lru_cache(maxsize=None)
def build_punctured_rm(r: int, m: int) -> PuncturedRMCode:
    """Punctured RM(r, m); requires 1 <= r < m <= 12.

    Both failure modes that would falsify the cyclic-structure claim are
    fatal: a rank drop under puncturing raises in the matrix constructor,
    and a shift-closure failure raises in generator_from_spanning_set.
    """
    if not 1 <= r < m:
        raise ValueError("need 1 <= r < m")
    if m > 12:
        raise ValueError("m must be at most 12")
    field = build_gf2m(m)
    ordering = punctured_ordering(m)
    full = rm_code(r, m)
    pcols = [
        tuple(col[p] for p in ordering)
        for col in (full.monomial_column(t) for t in full.monomials)
    ]
    code = GeneratorMatrixCode(2, pcols)
    cyc = generator_from_spanning_set(2, (1 << m) - 1, pcols)
    return PuncturedRMCode(r, m, field, ordering, full, code, cyc)


def _lift(pcode: PuncturedRMCode, w: Sequence[int], zero_value: int) -> list[int]:
    full_w = [0] * (1 << pcode.m)
    full_w[0] = zero_value
    for idx, p in enumerate(pcode.ordering):
        full_w[p] = w[idx] & 1
    return full_w


def punctured_rm_decode(
    pcode: PuncturedRMCode, w: Sequence[int], radius: Fraction | int
) -> DecodeOutcome:
    """Decode the punctured code by trying both values at the missing point.

    Each lift is decoded with the full-length majority decoder; results whose
    punctured codeword lies strictly within radius of w are collected, and
    the answer must be unique to count.
    """
    if len(w) != pcode.n:
        raise ValueError(f"word must have length {pcode.n}")
    hits: dict[Word, Word] = {}
    for zero_value in (0, 1):
        out = reed_decode(pcode.full, _lift(pcode, w, zero_value))
        if out is FAIL:
            continue
        pcw = pcode.puncture(out.codeword)
        if hamming_distance(pcw, w) < radius:
            hits[pcw] = out.message
    if len(hits) == 1:
        ((pcw, message),) = hits.items()
        return Decoded(pcw, message)
    return FAIL


def shortened_dual_rm_decode(
    r_prime: int, m: int, w: Sequence[int], radius: Fraction | int
) -> DecodeOutcome:
    """Decode the punctured RM(r', m) codewords that vanish at the zero point.

    The missing coordinate is known to be 0, so there is a single lift; the
    decoded polynomial must actually vanish at zero (equivalently, have zero
    constant coefficient), and the punctured result must lie strictly within
    radius.
    """
    pcode = build_punctured_rm(r_prime, m)
    if len(w) != pcode.n:
        raise ValueError(f"word must have length {pcode.n}")
    out = reed_decode(pcode.full, _lift(pcode, w, 0))
    if out is FAIL:
        return FAIL
    if out.codeword[0] != 0:
        return FAIL
    pcw = pcode.puncture(out.codeword)
    if hamming_distance(pcw, w) < radius:
        return Decoded(pcw, out.message)
    return FAIL
