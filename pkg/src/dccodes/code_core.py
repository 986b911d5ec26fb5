"""Linear codes over prime fields: encoding, weights, and exact oracles.

Words are plain tuples of ints. The exhaustive scans (distance, balanced
profile, nearest codeword) are budget-guarded: anything that would enumerate
more than ORACLE_BUDGET codewords raises OracleBudgetExceeded instead of
silently running forever. Binary codes get a packed-int Gray-code lane;
other fields use an incremental odometer over numpy states.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence, Union

import numpy as np

from .algebra import PrimeField

Word = tuple[int, ...]

DEFAULT_ORACLE_BUDGET = 1 << 24


class OracleBudgetExceeded(RuntimeError):
    """An exhaustive scan would exceed the configured enumeration budget."""


def oracle_budget() -> int:
    raw = os.environ.get("ORACLE_BUDGET")
    if raw is None:
        return DEFAULT_ORACLE_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"ORACLE_BUDGET must be an int, got {raw!r}") from exc
    if value < 1:
        raise ValueError("ORACLE_BUDGET must be positive")
    return value


def _require_budget(count: int, what: str) -> None:
    budget = oracle_budget()
    if count > budget:
        raise OracleBudgetExceeded(
            f"{what} needs {count} codeword evaluations, budget is {budget}"
        )


@dataclass(frozen=True)
class Decoded:
    """Successful decoder outcome: the codeword found and its message."""

    codeword: Word
    message: Word


class _Fail:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "FAIL"

    def __bool__(self) -> bool:
        return False


FAIL = _Fail()

DecodeOutcome = Union[Decoded, _Fail]

Decoder = Callable[[Sequence[int]], DecodeOutcome]


def _rref(mat: np.ndarray, q: int) -> tuple[np.ndarray, list[int], np.ndarray]:
    """Row-reduce mat mod q.

    Returns (rref, pivot_columns, transform) with transform @ mat == rref
    (mod q) and transform invertible.
    """
    rows, cols = mat.shape
    m = mat.astype(np.int64) % q
    t = np.eye(rows, dtype=np.int64)
    piv: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = None
        for rr in range(r, rows):
            if m[rr, c]:
                pr = rr
                break
        if pr is None:
            continue
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
            t[[r, pr]] = t[[pr, r]]
        inv = pow(int(m[r, c]), q - 2, q)
        m[r] = m[r] * inv % q
        t[r] = t[r] * inv % q
        col = m[:, c].copy()
        col[r] = 0
        nz = np.nonzero(col)[0]
        if nz.size:
            m[nz] = (m[nz] - np.outer(col[nz], m[r])) % q
            t[nz] = (t[nz] - np.outer(col[nz], t[r])) % q
        piv.append(c)
        r += 1
    return m, piv, t


class GeneratorMatrixCode:
    """A linear code given by the columns of its generator matrix.

    Column i is the codeword of the i-th unit message, so the code is the
    set of F_q-linear combinations of the columns. Columns must be linearly
    independent; a dependent set raises ValueError at construction.
    """

    def __init__(self, q: int, columns: Sequence[Sequence[int]], n: int | None = None):
        self.field = PrimeField(q)
        self.q = q
        cols = tuple(tuple(int(v) % q for v in col) for col in columns)
        if cols:
            lengths = {len(c) for c in cols}
            if len(lengths) != 1:
                raise ValueError("generator columns must share one length")
            actual = lengths.pop()
            if n is not None and n != actual:
                raise ValueError(f"stated length {n} != column length {actual}")
            n = actual
        elif n is None:
            raise ValueError("a dimension-zero code needs an explicit length n")
        if n < 1:
            raise ValueError("block length must be positive")
        self.n = n
        self.k = len(cols)
        self.columns = cols
        self._gen = np.array(cols, dtype=np.int64).reshape(self.k, n).T
        if self.k:
            rref, piv, t = _rref(np.array(cols, dtype=np.int64), q)
            if len(piv) < self.k:
                raise ValueError("generator columns are linearly dependent")
            self._pivots = np.array(piv)
            self._unencode_t = t.T % q
        else:
            self._pivots = np.array([], dtype=np.int64)
            self._unencode_t = np.zeros((0, 0), dtype=np.int64)
        self._dual: GeneratorMatrixCode | None = None
        self._dual_matrix: np.ndarray | None = None

    def encode(self, message: Sequence[int]) -> Word:
        if len(message) != self.k:
            raise ValueError(f"message must have length {self.k}")
        m = np.asarray(message, dtype=np.int64) % self.q
        return tuple(int(v) for v in (self._gen @ m) % self.q)

    def unencode(self, codeword: Sequence[int]) -> Word:
        """The unique message encoding to the given codeword.

        Assumes membership; garbage in, garbage out for non-codewords.
        """
        if len(codeword) != self.n:
            raise ValueError(f"word must have length {self.n}")
        c = np.asarray(codeword, dtype=np.int64)
        return tuple(int(v) for v in (self._unencode_t @ c[self._pivots]) % self.q)

    def __repr__(self) -> str:
        return f"GeneratorMatrixCode(q={self.q}, n={self.n}, k={self.k})"


def encode(code: GeneratorMatrixCode, message: Sequence[int]) -> Word:
    return code.encode(message)


def hamming_weight(w: Sequence[int]) -> int:
    return sum(1 for v in w if v)


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum(1 for a, b in zip(u, v) if a != b)


def balanced_weight(w: Sequence[int]) -> int:
    """min over symbols alpha of #{i : w_i != alpha}.

    Equals the length minus the highest symbol multiplicity, so it never
    needs the field size: symbols absent from w cannot attain the min.
    """
    if not len(w):
        return 0
    counts: dict[int, int] = {}
    for v in w:
        counts[v] = counts.get(v, 0) + 1
    return len(w) - max(counts.values())


def split_balanced_weight(c: Sequence[int], t: int, k: int) -> int:
    """Hamming weight of the first length-k block plus balanced weights of
    the remaining t-1 blocks."""
    if len(c) != t * k:
        raise ValueError(f"word length {len(c)} != {t}*{k}")
    total = hamming_weight(c[:k])
    for i in range(1, t):
        total += balanced_weight(c[i * k : (i + 1) * k])
    return total


def iter_codewords(
    code: GeneratorMatrixCode,
) -> Iterator[tuple[Word, Word]]:
    """Yield (message, codeword) over all q^k messages. Budget-guarded."""
    _require_budget(code.q**code.k, "codeword enumeration")
    for digits in itertools.product(range(code.q), repeat=code.k):
        yield digits, code.encode(digits)


def _packed_columns(code: GeneratorMatrixCode) -> list[int]:
    # Binary codeword as an int, bit i = coordinate i.
    return [sum(v << i for i, v in enumerate(col)) for col in code.columns]


def _gray_states(code: GeneratorMatrixCode) -> Iterator[tuple[int, int]]:
    """Yield (gray_message_int, packed_codeword) for every nonzero message."""
    pcols = _packed_columns(code)
    state = 0
    for t in range(1, 1 << code.k):
        i = (t & -t).bit_length() - 1
        state ^= pcols[i]
        yield t ^ (t >> 1), state


def _odometer_states(
    code: GeneratorMatrixCode,
) -> Iterator[tuple[list[int], np.ndarray]]:
    """Yield (message_digits, codeword_state) for every nonzero message.

    Messages run in lexicographic order (last digit fastest); the shared
    digits list and state array are mutated in place between yields.
    """
    q = code.q
    cols = [np.array(col, dtype=np.int64) for col in code.columns]
    digits = [0] * code.k
    state = np.zeros(code.n, dtype=np.int64)
    for _ in range(q**code.k - 1):
        i = code.k - 1
        while digits[i] == q - 1:
            digits[i] = 0
            # dropping q-1 copies of a column is the same as adding one copy
            state += cols[i]
            i -= 1
        digits[i] += 1
        state += cols[i]
        state %= q
        yield digits, state


def brute_force_distance(code: GeneratorMatrixCode) -> int | float:
    """Exact minimum distance by full enumeration; inf for dimension zero."""
    if code.k == 0:
        return math.inf
    _require_budget(code.q**code.k, "distance scan")
    if code.q == 2:
        return min(state.bit_count() for _, state in _gray_states(code))
    return min(
        int(np.count_nonzero(state)) for _, state in _odometer_states(code)
    )


def brute_force_balanced_profile(code: GeneratorMatrixCode, t: int) -> int | float:
    """Exact minimum of split_balanced_weight over nonzero codewords.

    The block count t must divide the length. Dimension zero returns inf.
    """
    if code.n % t:
        raise ValueError(f"block count {t} does not divide length {code.n}")
    if code.k == 0:
        return math.inf
    _require_budget(code.q**code.k, "balanced profile scan")
    blk = code.n // t
    if code.q == 2:
        mask = (1 << blk) - 1
        best = code.n + 1
        for _, state in _gray_states(code):
            total = (state & mask).bit_count()
            for i in range(1, t):
                ones = (state >> (i * blk) & mask).bit_count()
                total += min(ones, blk - ones)
                if total >= best:
                    break
            if total < best:
                best = total
        return best
    best = code.n + 1
    for _, state in _odometer_states(code):
        total = int(np.count_nonzero(state[:blk]))
        for i in range(1, t):
            counts = np.bincount(state[i * blk : (i + 1) * blk], minlength=code.q)
            total += blk - int(counts.max())
        if total < best:
            best = total
    return best


def nearest_codeword(
    code: GeneratorMatrixCode, w: Sequence[int]
) -> tuple[Word, int]:
    """Closest codeword to w by full scan, as (codeword, distance).

    Distance ties go to the lexicographically smallest message, so the
    result is reproducible; the message is recoverable via unencode.
    """
    if len(w) != code.n:
        raise ValueError(f"word must have length {code.n}")
    _require_budget(code.q**code.k, "nearest codeword scan")
    zero_msg = (0,) * code.k
    best_msg = zero_msg
    best_dist = hamming_weight(w)
    if code.k:
        if code.q == 2:
            wp = sum((v & 1) << i for i, v in enumerate(w))
            for gmsg, state in _gray_states(code):
                dist = (state ^ wp).bit_count()
                if dist < best_dist:
                    best_dist = dist
                    best_msg = tuple((gmsg >> i) & 1 for i in range(code.k))
                elif dist == best_dist:
                    msg = tuple((gmsg >> i) & 1 for i in range(code.k))
                    if msg < best_msg:
                        best_msg = msg
        else:
            w_arr = np.asarray(w, dtype=np.int64) % code.q
            for digits, state in _odometer_states(code):
                dist = int(np.count_nonzero(state != w_arr))
                if dist < best_dist or (
                    dist == best_dist and tuple(digits) < best_msg
                ):
                    best_dist = dist
                    best_msg = tuple(digits)
    return code.encode(best_msg), best_dist


def dual_basis(code: GeneratorMatrixCode) -> GeneratorMatrixCode:
    """A basis of the dual code, as a GeneratorMatrixCode of dimension n-k.

    Computed as the kernel of the generator transpose; cached per code.
    """
    if code._dual is not None:
        return code._dual
    q = code.q
    n = code.n
    if code.k:
        rref, piv, _ = _rref(np.array(code.columns, dtype=np.int64), q)
        piv_set = set(piv)
        basis = []
        for f in range(n):
            if f in piv_set:
                continue
            v = [0] * n
            v[f] = 1
            for r, p in enumerate(piv):
                v[p] = (-int(rref[r, f])) % q
            basis.append(tuple(v))
    else:
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    code._dual = GeneratorMatrixCode(q, basis, n=n)
    return code._dual


def _dual_matrix(code: GeneratorMatrixCode) -> np.ndarray:
    if code._dual_matrix is None:
        dual = dual_basis(code)
        code._dual_matrix = np.array(dual.columns, dtype=np.int64).reshape(
            dual.k, code.n
        )
    return code._dual_matrix


def is_codeword(code: GeneratorMatrixCode, w: Sequence[int]) -> bool:
    """Membership via orthogonality against the cached dual basis."""
    if len(w) != code.n:
        raise ValueError(f"word must have length {code.n}")
    h = _dual_matrix(code)
    if h.shape[0] == 0:
        return True
    syn = h @ (np.asarray(w, dtype=np.int64) % code.q) % code.q
    return not syn.any()


def bounded_distance_decode(
    code: GeneratorMatrixCode, w: Sequence[int], radius: Fraction | int
) -> DecodeOutcome:
    """Find a codeword strictly within radius of w by error-pattern search.

    Patterns are scanned in increasing weight, so the first hit is a nearest
    in-radius codeword; when 2*radius <= distance it is the unique one.
    Work grows as (n choose wt)*(q-1)^wt per weight level; intended for
    small radii, not as a general decoder.
    """
    r = Fraction(radius)
    max_wt = (r.numerator - 1) // r.denominator
    if max_wt < 0:
        return FAIL
    if len(w) != code.n:
        raise ValueError(f"word must have length {code.n}")
    q = code.q
    h = _dual_matrix(code)
    w_arr = np.asarray(w, dtype=np.int64) % q
    for wt in range(0, max_wt + 1):
        rows = []
        cands = []
        for positions in itertools.combinations(range(code.n), wt):
            for deltas in itertools.product(range(1, q), repeat=wt):
                c = w_arr.copy()
                for pos, delta in zip(positions, deltas):
                    c[pos] = (c[pos] - delta) % q
                rows.append(c)
        if not rows:
            continue
        cands = np.stack(rows)
        if h.shape[0]:
            syn = cands @ h.T % q
            hits = np.nonzero(~syn.any(axis=1))[0]
        else:
            hits = np.arange(len(rows))
        if hits.size:
            c = tuple(int(v) for v in cands[hits[0]])
            return Decoded(c, code.unencode(c))
    return FAIL
