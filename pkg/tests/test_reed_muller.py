import random
from fractions import Fraction

import numpy as np
import pytest

from dccodes.code_core import (
    FAIL,
    Decoded,
    brute_force_distance,
    hamming_weight,
    iter_codewords,
    nearest_codeword,
)
from dccodes.reed_muller import (
    build_punctured_rm,
    punctured_ordering,
    punctured_rm_decode,
    reed_decode,
    rm_code,
    rm_encode,
    shortened_dual_rm_decode,
)


def test_rm_encode_examples():
    const = rm_code(0, 2)
    assert rm_encode(const, (1,)) == (1, 1, 1, 1)
    line = rm_code(1, 2)
    assert line.monomials == (0, 1, 2)
    assert rm_encode(line, (0, 1, 0)) == (0, 1, 0, 1)
    quad = rm_code(2, 2)
    assert rm_encode(quad, (0, 0, 0, 1)) == (0, 0, 0, 1)
    assert rm_encode(quad, (1, 1, 0, 0)) == (1, 0, 1, 0)


def test_rm_parameters():
    assert rm_code(1, 3).k == 4
    assert rm_code(2, 4).k == 11
    assert rm_code(1, 4).n == 16
    with pytest.raises(ValueError):
        rm_code(3, 2)
    with pytest.raises(ValueError):
        rm_code(0, 0)


@pytest.mark.parametrize(
    "r,m,d",
    [(1, 3, 4), (1, 4, 8), (2, 4, 4), (1, 5, 16), (2, 5, 8)],
)
def test_rm_exact_distance(r, m, d):
    assert brute_force_distance(rm_code(r, m).generator_code) == d


@pytest.mark.parametrize("r,m", [(1, 3), (1, 4), (2, 4)])
def test_rm_duality(r, m):
    left = np.array(rm_code(r, m).generator_code.columns)
    right = np.array(rm_code(m - r - 1, m).generator_code.columns)
    assert not ((left @ right.T) % 2).any()


def test_reed_decode_exhaustive_rm13():
    # the decoder accepts exactly the words within distance 1 of a codeword
    # and returns that (unique) nearest codeword
    code = rm_code(1, 3)
    for idx in range(256):
        w = tuple((idx >> i) & 1 for i in range(8))
        cw, dist = nearest_codeword(code.generator_code, w)
        out = reed_decode(code, w)
        if dist <= 1:
            assert isinstance(out, Decoded)
            assert out.codeword == cw
            assert rm_encode(code, out.message) == cw
        else:
            assert out is FAIL


def test_reed_decode_clean_codewords():
    # every clean codeword decodes to itself: exhaustive where the code is
    # small, sampled for the two big m=4 codes
    rng = random.Random(431)
    for m in range(1, 5):
        for r in range(m + 1):
            code = rm_code(r, m)
            if code.k <= 11:
                messages = [msg for msg, _ in iter_codewords(code.generator_code)]
            else:
                messages = [
                    tuple(rng.randrange(2) for _ in range(code.k))
                    for _ in range(300)
                ]
            for msg in messages:
                cw = rm_encode(code, msg)
                out = reed_decode(code, cw)
                assert isinstance(out, Decoded)
                assert out.codeword == cw and out.message == msg


def test_reed_decode_corrects_weight_three_rm25():
    code = rm_code(2, 5)
    rng = random.Random(433)
    for _ in range(30):
        msg = tuple(rng.randrange(2) for _ in range(code.k))
        cw = rm_encode(code, msg)
        w = list(cw)
        for pos in rng.sample(range(32), 3):
            w[pos] ^= 1
        out = reed_decode(code, tuple(w))
        assert isinstance(out, Decoded) and out.codeword == cw


def test_reed_decode_rejects_wrong_length():
    with pytest.raises(ValueError):
        reed_decode(rm_code(1, 3), (0,) * 7)


def test_punctured_ordering():
    assert sorted(punctured_ordering(2)) == [1, 2, 3]
    order7 = punctured_ordering(3)
    assert order7[0] == 1
    assert sorted(order7) == list(range(1, 8))
    assert len(set(punctured_ordering(4))) == 15
    with pytest.raises(ValueError):
        punctured_ordering(1)


def test_build_punctured_rm_parameters():
    hamming = build_punctured_rm(1, 3)
    assert hamming.n == 7 and hamming.code.k == 4
    assert int(hamming.cyclic.g.degree) == 3

    big = build_punctured_rm(2, 4)
    assert big.n == 15 and big.code.k == 11
    assert int(big.cyclic.g.degree) == 4

    with pytest.raises(ValueError):
        build_punctured_rm(0, 3)
    with pytest.raises(ValueError):
        build_punctured_rm(3, 3)


def test_punctured_cyclic_codewords_agree():
    pcode = build_punctured_rm(1, 3)
    as_matrix = {cw for _, cw in iter_codewords(pcode.code)}
    as_cyclic = {cw for _, cw in iter_codewords(pcode.cyclic.generator_code)}
    assert as_matrix == as_cyclic


def test_punctured_rm_decode_round_trip():
    pcode = build_punctured_rm(2, 4)
    rng = random.Random(439)
    for _ in range(50):
        msg = tuple(rng.randrange(2) for _ in range(11))
        cw = pcode.puncture(rm_encode(pcode.full, msg))
        out = punctured_rm_decode(pcode, cw, Fraction(3, 2))
        assert isinstance(out, Decoded) and out.codeword == cw
        for pos in range(15):
            w = list(cw)
            w[pos] ^= 1
            out = punctured_rm_decode(pcode, tuple(w), Fraction(3, 2))
            assert isinstance(out, Decoded) and out.codeword == cw

    zero = punctured_rm_decode(pcode, (0,) * 15, Fraction(1, 2))
    assert isinstance(zero, Decoded)
    assert zero.codeword == (0,) * 15 and hamming_weight(zero.message) == 0

    with pytest.raises(ValueError):
        punctured_rm_decode(pcode, (0,) * 14, Fraction(3, 2))


def test_shortened_dual_rm_decode():
    full = rm_code(1, 4)
    pcode = build_punctured_rm(1, 4)
    # x1 vanishes at the zero point, so its punctured word is decodable
    x1 = rm_encode(full, (0, 1, 0, 0, 0))
    assert x1[0] == 0
    cw = pcode.puncture(x1)
    out = shortened_dual_rm_decode(1, 4, cw, Fraction(7, 2))
    assert isinstance(out, Decoded) and out.codeword == cw

    rng = random.Random(443)
    for _ in range(50):
        msg = (0,) + tuple(rng.randrange(2) for _ in range(4))
        word = pcode.puncture(rm_encode(full, msg))
        w = list(word)
        for pos in rng.sample(range(15), 2):
            w[pos] ^= 1
        out = shortened_dual_rm_decode(1, 4, tuple(w), Fraction(7, 2))
        assert isinstance(out, Decoded) and out.codeword == word

    # constant coefficient 1 never vanishes at zero: must be rejected
    bad = pcode.puncture(rm_encode(full, (1, 1, 0, 0, 0)))
    assert shortened_dual_rm_decode(1, 4, bad, Fraction(7, 2)) is FAIL
