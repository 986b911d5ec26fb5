"""Double-circulant codes from Sidon sets, plus the majority-vote decoder.

The generator stacks the identity over a circulant whose first column is the
indicator vector of a Sidon set. Distinct pairwise differences cap the
support overlap of any two circulant columns at 2, and that overlap bound b
is exactly what drives the majority decoder's radius d/(2b).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import Polynomial, PrimeField, cyclic_mul
from .code_core import FAIL, Decoded, DecodeOutcome, GeneratorMatrixCode, Word
from .sidon import SidonSet

# Self-test mutation hook: when set to a non-empty value, majority ties
# resolve to the largest field element instead of the smallest, which the
# self-test suite must detect as a failure.
TIE_HOOK_ENV = "DCCODES_MAJORITY_TIE_HIGH"


def _tie_high() -> bool:
    return bool(os.environ.get(TIE_HOOK_ENV))


@dataclass(frozen=True)
class CirculantMatrix:
    """k x k circulant held as its first column only.

    Column j is the cyclic downward shift of column 0 by j positions; the
    matrix action is polynomial multiplication mod x^k - 1 and the full
    matrix is never materialized.
    """

    k: int
    first_column: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.first_column) != self.k:
            raise ValueError("first column length must equal k")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.first_column) if v)

    def column(self, j: int) -> tuple[int, ...]:
        a = self.first_column
        k = self.k
        return tuple(a[(i - j) % k] for i in range(k))

    def act(self, vec: Sequence[int], q: int) -> tuple[int, ...]:
        """Matrix-vector product over F_q, via multiplication mod x^k - 1."""
        field = PrimeField(q)
        a = Polynomial(self.first_column, field)
        m = Polynomial(tuple(vec), field)
        return cyclic_mul(a, m, self.k)


@dataclass(frozen=True)
class DesignProfile:
    """d: minimum column weight; b: maximum pairwise support overlap."""

    d: int
    b: int

    def __post_init__(self) -> None:
        if self.d < 0 or self.b < 0:
            raise ValueError("profile entries must be non-negative")


def design_profile(a: CirculantMatrix) -> DesignProfile:
    """Profile of a circulant: column weight and max pairwise support overlap.

    By circulant symmetry the overlap of columns 0 and j is the number of
    ordered support pairs at difference j mod k, so one pass over pairwise
    differences of the first column's support covers all column pairs.
    """
    supp = a.support
    d = len(supp)
    counts: dict[int, int] = {}
    for s in supp:
        for s2 in supp:
            if s == s2:
                continue
            j = (s - s2) % a.k
            counts[j] = counts.get(j, 0) + 1
    b = max(counts.values(), default=0)
    return DesignProfile(d, b)


class SidonDCCode:
    """Double-circulant code with a Sidon-set circulant block."""

    def __init__(self, q: int, k: int, sidon: SidonSet):
        if len(sidon) < 2:
            raise ValueError("Sidon set must have at least 2 elements")
        if sidon.elements[-1] >= k or sidon.elements[0] < 0:
            raise ValueError(f"Sidon elements must lie in [0, {k})")
        self.q = q
        self.field = PrimeField(q)
        self.k = k
        self.sidon = sidon
        first_column = tuple(1 if i in set(sidon.elements) else 0 for i in range(k))
        self.circulant = CirculantMatrix(k, first_column)
        self.profile = design_profile(self.circulant)
        if self.profile.b > 2:
            raise AssertionError(
                "a Sidon indicator circulant cannot have support overlap > 2"
            )
        # numpy internals for the decoder
        self._supp = np.array(self.circulant.support, dtype=np.int64)
        self._vote_idx = (self._supp[:, None] + np.arange(k)[None, :]) % k
        self._code: GeneratorMatrixCode | None = None

    @property
    def n(self) -> int:
        return 2 * self.k

    @property
    def decode_radius(self) -> Fraction:
        return Fraction(self.profile.d, 2 * self.profile.b)

    @property
    def distance_bound(self) -> Fraction:
        return Fraction(self.profile.d, self.profile.b) + 1

    @property
    def balanced_bound(self) -> Fraction:
        return min(
            Fraction(self.profile.d, self.profile.b) + 1,
            Fraction(self.k, self.profile.d),
        )

    @property
    def code(self) -> GeneratorMatrixCode:
        """Identity-over-circulant generator, built on first use."""
        if self._code is None:
            cols = []
            for j in range(self.k):
                unit = tuple(int(i == j) for i in range(self.k))
                cols.append(unit + self.circulant.column(j))
            self._code = GeneratorMatrixCode(self.q, cols)
        return self._code

    def __repr__(self) -> str:
        return (
            f"SidonDCCode(q={self.q}, k={self.k}, "
            f"d={self.profile.d}, b={self.profile.b})"
        )


def build_sidon_dc(q: int, k: int, s: SidonSet | Sequence[int]) -> SidonDCCode:
    """Double-circulant code for a Sidon set living in [0, k).

    A bare element sequence is wrapped (and thereby verified) first.
    """
    if not isinstance(s, SidonSet):
        s = SidonSet(tuple(sorted(s)), k)
    return SidonDCCode(q, k, s)


def dc_encode(code: SidonDCCode, m: Sequence[int]) -> Word:
    """Codeword (m, A*m) where A is the Sidon circulant."""
    if len(m) != code.k:
        raise ValueError(f"message must have length {code.k}")
    msg = tuple(int(v) % code.q for v in m)
    return msg + code.circulant.act(msg, code.q)


def majority_vote(values: Sequence[int], q: int) -> int:
    """Most frequent value among values, all in [0, q).

    Ties resolve to the smallest field element (largest under the self-test
    mutation hook). The decoder's correctness proof guarantees a strict
    majority inside the decoding radius, so the tie rule only matters beyond
    it, where the final distance check catches wrong guesses anyway.
    """
    counts = [0] * q
    for v in values:
        counts[v] += 1
    best = max(counts)
    if _tie_high():
        return q - 1 - counts[::-1].index(best)
    return counts.index(best)


def design_decode(code: SidonDCCode, w: Sequence[int]) -> DecodeOutcome:
    """Majority-vote decoding of the double-circulant code.

    With w = (w0, w1), the vector y = A*w0 - w1 equals A*e0 - e1 for error
    blocks e0, e1, so each coordinate of e0 shows up as the majority value of
    y over the matching column support whenever the total error weight is
    below d/(2b). The recovered codeword is accepted only if it lies strictly
    within that radius of w.
    """
    k = code.k
    if len(w) != 2 * k:
        raise ValueError(f"word must have length {2 * k}")
    q = code.q
    d = code.profile.d
    w_arr = np.asarray(w, dtype=np.int64) % q
    w0, w1 = w_arr[:k], w_arr[k:]

    acc = np.zeros(k, dtype=np.int64)
    for s in code.circulant.support:
        acc += np.roll(w0, s)
    y = (acc - w1) % q

    votes = y[code._vote_idx]  # shape (d, k); column i sees y over supp+i
    if q == 2:
        ones = votes.sum(axis=0)
        if _tie_high():
            z = (2 * ones >= d).astype(np.int64)
        else:
            z = (2 * ones > d).astype(np.int64)
    else:
        counts = np.stack([(votes == alpha).sum(axis=0) for alpha in range(q)])
        if _tie_high():
            z = q - 1 - counts[::-1].argmax(axis=0)
        else:
            z = counts.argmax(axis=0)

    c0 = (w0 - z) % q
    acc = np.zeros(k, dtype=np.int64)
    for s in code.circulant.support:
        acc += np.roll(c0, s)
    c1 = acc % q
    c = tuple(int(v) for v in c0) + tuple(int(v) for v in c1)
    dist = int(np.count_nonzero(np.concatenate([c0, c1]) != w_arr))
    # strict rational comparison: dist < d / (2b)
    if 2 * code.profile.b * dist < d:
        return Decoded(c, tuple(int(v) for v in c0))
    return FAIL
