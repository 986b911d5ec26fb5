"""Double-circulant codes built from a cyclic code's generator polynomial.

The circulant block's first column is the coefficient vector of the cyclic
code's generator g, so the second codeword block is g(x)*m(x) mod x^k - 1:
always a member of the base cyclic code. Decoding composes a decoder for the
base code with one for its dual: the second block pins down m up to a
multiple of the check polynomial, and the reversed first-block residue is a
dual codeword that the dual decoder recovers.

The shipped instantiation takes the base code to be the dual of a punctured
Reed-Muller code, with majority-logic decoders on both sides.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial, PrimeField, poly_divmod
from .code_core import (
    FAIL,
    Decoded,
    DecodeOutcome,
    GeneratorMatrixCode,
    Word,
    balanced_weight,
    hamming_distance,
    iter_codewords,
)
from .cyclic import CyclicCode, dual_code
from .design_dc import CirculantMatrix
from .reed_muller import (
    build_punctured_rm,
    punctured_rm_decode,
    shortened_dual_rm_decode,
)


class CyclicDCCode:
    """Identity-over-circulant code whose circulant column is g's coefficients.

    d and d_perp are certified distance parameters of the base code and its
    dual; the composed decoder corrects strictly below min(d, d_perp)/2
    errors and its final check uses exactly that radius.
    """

    def __init__(self, base: CyclicCode, d: int, d_perp: int):
        if base.decoder is None or base.dual_decoder is None:
            raise ValueError(
                "base cyclic code needs both a decoder and a dual decoder"
            )
        if d < 1 or d_perp < 1:
            raise ValueError("distance parameters must be positive")
        self.base = base
        self.d = d
        self.d_perp = d_perp
        self.q = base.q
        self.field = PrimeField(base.q)
        self.k = base.n
        self.a = base.g.padded(self.k)
        self.circulant = CirculantMatrix(self.k, self.a)
        self._code: GeneratorMatrixCode | None = None

    @property
    def n(self) -> int:
        return 2 * self.k

    @property
    def d_prime(self) -> int:
        return min(self.d, self.d_perp)

    @property
    def decode_radius(self) -> Fraction:
        return Fraction(self.d_prime, 2)

    @property
    def code(self) -> GeneratorMatrixCode:
        if self._code is None:
            cols = []
            for j in range(self.k):
                unit = tuple(int(i == j) for i in range(self.k))
                cols.append(unit + self.circulant.column(j))
            self._code = GeneratorMatrixCode(self.q, cols)
        return self._code

    def __repr__(self) -> str:
        return (
            f"CyclicDCCode(q={self.q}, k={self.k}, d={self.d}, "
            f"d_perp={self.d_perp})"
        )


def build_cyclic_dc(base: CyclicCode, d: int, d_perp: int) -> CyclicDCCode:
    return CyclicDCCode(base, d, d_perp)


def cyc_dc_encode(code: CyclicDCCode, m: Sequence[int]) -> Word:
    if len(m) != code.k:
        raise ValueError(f"message must have length {code.k}")
    msg = tuple(int(v) % code.q for v in m)
    return msg + code.circulant.act(msg, code.q)


def cyc_dc_decode(code: CyclicDCCode, w: Sequence[int]) -> DecodeOutcome:
    """Two-stage decoding of the identity-over-circulant code.

    Stage 1 decodes the second block inside the base cyclic code and divides
    by g; an inexact division means the stage-1 answer was wrong, which is a
    Fail. Stage 2 subtracts the quotient from the first block, reverses it,
    and decodes in the dual code. The two stages pin down the message, and a
    final strict distance check against min(d, d_perp)/2 guards the output.
    """
    k = code.k
    if len(w) != 2 * k:
        raise ValueError(f"word must have length {2 * k}")
    q = code.q
    w0 = [int(v) % q for v in w[:k]]
    w1 = [int(v) % q for v in w[k:]]

    out1 = code.base.decoder(tuple(w1), Fraction(code.d, 2))
    if out1 is FAIL:
        return FAIL
    c1 = Polynomial(out1.codeword, code.field)
    r_poly, rem = poly_divmod(c1, code.base.g)
    if not rem.is_zero():
        return FAIL
    r_vec = r_poly.padded(k)

    shifted = tuple((w0[i] - r_vec[i]) % q for i in range(k - 1, -1, -1))
    out0 = code.base.dual_decoder(shifted, Fraction(code.d_perp, 2))
    if out0 is FAIL:
        return FAIL
    c0 = tuple(reversed(out0.codeword))

    msg = tuple((a + b) % q for a, b in zip(c0, r_vec))
    cw = cyc_dc_encode(code, msg)
    if 2 * hamming_distance(cw, w) < code.d_prime:
        return Decoded(cw, msg)
    return FAIL


def d_balanced_check(base: CyclicCode, d: int) -> bool:
    """Every nonzero codeword of the base code has balanced weight >= d.

    Exhaustive over the base code's q^k codewords, budget-guarded.
    """
    for message, cw in iter_codewords(base.generator_code):
        if any(message) and balanced_weight(cw) < d:
            return False
    return True


def build_rm_dual_dc(m: int, r: int | None = None) -> CyclicDCCode:
    """The shipped instantiation: base code = dual of punctured RM(r, m).

    Defaults to r = m // 2. The dual of the punctured RM(r, m) code is the
    set of punctured RM(m-r-1, m) codewords vanishing at the omitted zero
    point, so both the code and its dual have majority-logic decoders:
    d = 2^(r+1) - 1 and d_perp = 2^(m-r) - 1 are the certified parameters.
    """
    if r is None:
        r = m // 2
    if not 1 <= r < m - 1:
        raise ValueError("need 1 <= r <= m-2 so both sides decode")
    prm = build_punctured_rm(r, m)
    base = dual_code(prm.cyclic)

    r_dual = m - r - 1

    def dec(word: Sequence[int], radius: Fraction) -> DecodeOutcome:
        return shortened_dual_rm_decode(r_dual, m, word, radius)

    def dec_perp(word: Sequence[int], radius: Fraction) -> DecodeOutcome:
        return punctured_rm_decode(prm, word, radius)

    base = base.with_decoders(dec, dec_perp)
    d = (1 << (r + 1)) - 1
    d_perp = (1 << (m - r)) - 1
    return build_cyclic_dc(base, d, d_perp)
