"""Command-line front end: construct codes, encode/decode word files, run
oracle analyses and the acceptance self-test.

Exit codes: 0 success, 1 usage or malformed input, 2 decoder Fail.
Word files hold ASCII decimal symbols separated by whitespace, one word per
line. Descriptors are JSON with sorted keys so serialization is bit-exact.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .algebra import find_wozencraft_k
from .code_core import (
    FAIL,
    DecodeOutcome,
    GeneratorMatrixCode,
    OracleBudgetExceeded,
    brute_force_balanced_profile,
    brute_force_distance,
    hamming_distance,
)
from .cyc_dc import CyclicDCCode, build_rm_dual_dc, cyc_dc_decode, cyc_dc_encode
from .design_dc import SidonDCCode, build_sidon_dc, dc_encode, design_decode
from .selftest import CRITERIA, run_all
from .sidon import SidonSet, sidon_for_length
from .weldon import (
    TCirculantCode,
    WeldonCode,
    build_wozencraft,
    validate_parameters,
    weldon_decode,
    weldon_encode,
)

FAMILIES = ("sidon-dc", "rm-dc", "wozencraft")


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1; argparse defaults to 2, which we reserve
    # for decoder Fail
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _frac(f: Fraction) -> str:
    """Exact rational encoding for descriptor fields."""
    return f"{f.numerator}/{f.denominator}"


def _show(f: Fraction) -> str:
    """Human-readable rational: whole numbers print without a denominator."""
    return str(f)


def _parse_frac(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


@dataclass
class LoadedCode:
    """A constructed code plus the uniform hooks the commands need."""

    family: str
    descriptor: dict
    q: int
    message_length: int
    block_length: int
    radius: Fraction
    encode: Callable[[Sequence[int]], tuple]
    decode: Callable[[Sequence[int]], DecodeOutcome]
    matrix_code: Callable[[], GeneratorMatrixCode]
    balanced_blocks: int
    bound_lines: list[str]
    certified_distance: Fraction


def _build_sidon_dc_family(q: int, k: int, sidon: Optional[Sequence[int]]) -> LoadedCode:
    if sidon is None:
        s = sidon_for_length(k)
    else:
        s = SidonSet(tuple(sorted(int(v) for v in sidon)), k)
    code = build_sidon_dc(q, k, s)
    d, b = code.profile.d, code.profile.b
    desc = {
        "family": "sidon-dc",
        "q": q,
        "k": k,
        "sidon": list(s.elements),
        "design_d": d,
        "design_b": b,
        "distance_bound": _frac(code.distance_bound),
        "balanced_bound": _frac(code.balanced_bound),
        "decoding_radius": _frac(code.decode_radius),
    }
    bounds = [
        f"distance bound {_show(code.distance_bound)} "
        f"(design bound d/b + 1 with column weight d={d}, support overlap b={b})",
        f"balanced bound {_show(code.balanced_bound)} "
        f"(min of d/b + 1 and k/d = {k}/{d})",
        f"decoding radius {_show(code.decode_radius)} "
        f"(majority vote exact below d/(2b) errors)",
    ]
    return LoadedCode(
        family="sidon-dc",
        descriptor=desc,
        q=q,
        message_length=k,
        block_length=2 * k,
        radius=code.decode_radius,
        encode=lambda m: dc_encode(code, m),
        decode=lambda w: design_decode(code, w),
        matrix_code=lambda: code.code,
        balanced_blocks=2,
        bound_lines=bounds,
        certified_distance=code.distance_bound,
    )


def _build_rm_dc_family(m: int, r: Optional[int]) -> LoadedCode:
    code = build_rm_dual_dc(m, r)
    r_used = m // 2 if r is None else r
    desc = {
        "family": "rm-dc",
        "q": 2,
        "m": m,
        "r": r_used,
        "k": code.k,
        "d": code.d,
        "d_perp": code.d_perp,
        "d_prime": code.d_prime,
        "decoding_radius": _frac(code.decode_radius),
    }
    bounds = [
        f"distance bound {code.d_prime} "
        f"(min of base code distance d={code.d} and dual distance "
        f"d_perp={code.d_perp})",
        f"decoding radius {_show(code.decode_radius)} "
        f"(two-stage decoding exact below min(d, d_perp)/2 errors)",
    ]
    return LoadedCode(
        family="rm-dc",
        descriptor=desc,
        q=2,
        message_length=code.k,
        block_length=2 * code.k,
        radius=code.decode_radius,
        encode=lambda msg: cyc_dc_encode(code, msg),
        decode=lambda w: cyc_dc_decode(code, w),
        matrix_code=lambda: code.code,
        balanced_blocks=2,
        bound_lines=bounds,
        certified_distance=Fraction(code.d_prime),
    )


def _build_wozencraft_family(
    q: int, k: int, sidon: Optional[Sequence[int]]
) -> LoadedCode:
    try:
        validate_parameters(q, k)
    except ValueError as exc:
        try:
            nearest = find_wozencraft_k(q, max(k, 2))
            hint = f"; nearest valid k >= {k} is {nearest}"
        except (ValueError, LookupError):
            hint = ""
        raise ValueError(f"{exc}{hint}") from exc
    w, d = build_wozencraft(q, k, sidon)
    src = d
    desc = {
        "family": "wozencraft",
        "q": q,
        "k": k,
        "t": w.t,
        "sidon": list(
            i for i, v in enumerate(src.first_columns[0]) if v
        ),
        "alphas": [list(a) for a in w.alphas],
        "balanced_bound": _frac(src.balanced_d),
        "decoding_radius": _frac(src.balanced_d / 2),
    }
    d_s = sum(1 for v in src.first_columns[0] if v)
    bounds = [
        f"distance bound {_show(src.balanced_d)} "
        f"(balanced parameter of the source circulant code: "
        f"min of d/b + 1 and k/d with d={d_s})",
        f"decoding radius {_show(src.balanced_d / 2)} "
        f"(fold-and-retry decoding exact below half the balanced parameter)",
    ]
    return LoadedCode(
        family="wozencraft",
        descriptor=desc,
        q=q,
        message_length=w.dimension,
        block_length=w.n,
        radius=src.balanced_d / 2,
        encode=lambda m: weldon_encode(w, m),
        decode=lambda word: weldon_decode(w, d, word),
        matrix_code=lambda: w.code,
        balanced_blocks=w.t,
        bound_lines=bounds,
        certified_distance=src.balanced_d,
    )


def build_family(family: str, **params) -> LoadedCode:
    if family == "sidon-dc":
        return _build_sidon_dc_family(params["q"], params["k"], params.get("sidon"))
    if family == "rm-dc":
        return _build_rm_dc_family(params["m"], params.get("r"))
    if family == "wozencraft":
        return _build_wozencraft_family(params["q"], params["k"], params.get("sidon"))
    raise ValueError(f"unknown family {family!r}")


def dump_descriptor(desc: dict) -> str:
    return json.dumps(desc, sort_keys=True, indent=2) + "\n"


def load_descriptor(path: str) -> LoadedCode:
    """Rebuild the code from its parameters and verify every derived field.

    A descriptor whose recorded bounds disagree with what its parameters
    produce is rejected, so a stale or edited file cannot silently change
    the code's certified properties.
    """
    with open(path, "r", encoding="ascii") as fh:
        desc = json.load(fh)
    family = desc.get("family")
    if family == "sidon-dc":
        loaded = _build_sidon_dc_family(desc["q"], desc["k"], desc.get("sidon"))
    elif family == "rm-dc":
        loaded = _build_rm_dc_family(desc["m"], desc.get("r"))
    elif family == "wozencraft":
        loaded = _build_wozencraft_family(desc["q"], desc["k"], desc.get("sidon"))
    else:
        raise ValueError(f"unknown family {family!r}")
    if loaded.descriptor != desc:
        raise ValueError(
            "descriptor does not match what its parameters produce; "
            "refusing to use it"
        )
    return loaded


# ---------------------------------------------------------------------------
# word file I/O
# ---------------------------------------------------------------------------


def _read_words(stream, q: int, length: int, what: str) -> list[tuple[int, ...]]:
    words = []
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            symbols = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer symbol in {what}")
        if len(symbols) != length:
            raise ValueError(
                f"line {lineno}: expected {length} symbols, got {len(symbols)}"
            )
        if any(not 0 <= s < q for s in symbols):
            raise ValueError(f"line {lineno}: symbols must lie in [0, {q})")
        words.append(symbols)
    return words


def _write_words(stream, words) -> None:
    for w in words:
        stream.write(" ".join(str(v) for v in w) + "\n")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_construct(args) -> int:
    params = {}
    if args.family in ("sidon-dc", "wozencraft"):
        if args.q is None or args.k is None:
            print("construct: --q and --k are required", file=sys.stderr)
            return 1
        params = {"q": args.q, "k": args.k, "sidon": args.sidon}
    else:
        if args.m is None:
            print("construct: --m is required for rm-dc", file=sys.stderr)
            return 1
        params = {"m": args.m, "r": args.r}
    try:
        loaded = build_family(args.family, **params)
    except (ValueError, LookupError) as exc:
        print(f"construct: {exc}", file=sys.stderr)
        return 1
    text = dump_descriptor(loaded.descriptor)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
        print(f"wrote descriptor to {args.out}")
    else:
        sys.stdout.write(text)
    print(
        f"{loaded.family}: length {loaded.block_length}, "
        f"dimension {loaded.message_length}, alphabet F_{loaded.q}"
    )
    for line in loaded.bound_lines:
        print(line)
    return 0


def _cmd_encode(args) -> int:
    try:
        loaded = load_descriptor(args.descriptor)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"encode: {exc}", file=sys.stderr)
        return 1
    try:
        instream = open(args.infile, "r") if args.infile else sys.stdin
        try:
            messages = _read_words(
                instream, loaded.q, loaded.message_length, "message"
            )
        finally:
            if args.infile:
                instream.close()
    except (OSError, ValueError) as exc:
        print(f"encode: {exc}", file=sys.stderr)
        return 1
    words = [loaded.encode(m) for m in messages]
    if args.out:
        with open(args.out, "w") as fh:
            _write_words(fh, words)
    else:
        _write_words(sys.stdout, words)
    return 0


def _cmd_decode(args) -> int:
    try:
        loaded = load_descriptor(args.descriptor)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"decode: {exc}", file=sys.stderr)
        return 1
    try:
        instream = open(args.infile, "r") if args.infile else sys.stdin
        try:
            words = _read_words(instream, loaded.q, loaded.block_length, "word")
        finally:
            if args.infile:
                instream.close()
    except (OSError, ValueError) as exc:
        print(f"decode: {exc}", file=sys.stderr)
        return 1
    out_lines = []
    for idx, w in enumerate(words, start=1):
        outcome = loaded.decode(w)
        if outcome is FAIL:
            print(f"decode: word {idx}: no codeword within radius", file=sys.stderr)
            return 2
        corrected = hamming_distance(outcome.codeword, w)
        print(f"word {idx}: corrected {corrected} errors", file=sys.stderr)
        out_lines.append(outcome.message)
    if args.out:
        with open(args.out, "w") as fh:
            _write_words(fh, out_lines)
    else:
        _write_words(sys.stdout, out_lines)
    return 0


def _cmd_analyze(args) -> int:
    try:
        loaded = load_descriptor(args.descriptor)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 1
    print(
        f"{loaded.family}: length {loaded.block_length}, "
        f"dimension {loaded.message_length}, alphabet F_{loaded.q}"
    )
    for line in loaded.bound_lines:
        print(line)
    if args.exact_distance:
        start = time.perf_counter()
        try:
            code = loaded.matrix_code()
            dist = brute_force_distance(code)
        except OracleBudgetExceeded as exc:
            print(f"exact distance: skipped ({exc})")
        else:
            elapsed = time.perf_counter() - start
            margin = Fraction(dist) - loaded.certified_distance
            print(
                f"exact distance {dist} (bound {_show(loaded.certified_distance)}, "
                f"margin {_show(margin)}) in {elapsed:.2f}s"
            )
    if args.balanced:
        start = time.perf_counter()
        try:
            code = loaded.matrix_code()
            prof = brute_force_balanced_profile(code, loaded.balanced_blocks)
        except OracleBudgetExceeded as exc:
            print(f"balanced profile: skipped ({exc})")
        else:
            elapsed = time.perf_counter() - start
            print(
                f"exact balanced profile {prof} over {loaded.balanced_blocks} "
                f"blocks in {elapsed:.2f}s"
            )
    # quick decoder timing on a clean codeword
    zero = loaded.encode((0,) * loaded.message_length)
    start = time.perf_counter()
    loaded.decode(zero)
    print(f"single decode: {(time.perf_counter() - start) * 1000:.2f} ms")
    return 0


def _cmd_params_find_k(args) -> int:
    try:
        k = find_wozencraft_k(args.q, args.min, args.limit)
    except (ValueError, LookupError) as exc:
        print(f"params: {exc}", file=sys.stderr)
        return 1
    print(k)
    return 0


def _cmd_selftest(args) -> int:
    if args.list:
        for name, (_, blurb) in CRITERIA.items():
            print(f"{name}: {blurb}")
        return 0
    names = None
    if args.only:
        names = [n.strip() for n in args.only.split(",") if n.strip()]
        unknown = [n for n in names if n not in CRITERIA]
        if unknown:
            print(f"selftest: unknown criteria {', '.join(unknown)}", file=sys.stderr)
            return 1
    results = run_all(names)
    failed = 0
    for res in results:
        print(f"SELFTEST {res.name} {res.status} {res.seconds:.2f}s {res.detail}")
        if res.status == "FAIL":
            failed += 1
    total = len(results)
    passed = sum(1 for r in results if r.status == "PASS")
    skipped = sum(1 for r in results if r.status == "SKIP")
    print(f"SELFTEST SUMMARY pass={passed} fail={failed} skip={skipped} total={total}")
    return 1 if failed else 0


def _cmd_bench(args) -> int:
    try:
        loaded = load_descriptor(args.descriptor)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return 1
    rng = random.Random(args.seed)
    weight = (loaded.radius.numerator - 1) // loaded.radius.denominator
    enc_time = 0.0
    dec_time = 0.0
    for _ in range(args.trials):
        msg = tuple(rng.randrange(loaded.q) for _ in range(loaded.message_length))
        start = time.perf_counter()
        cw = loaded.encode(msg)
        enc_time += time.perf_counter() - start
        w = list(cw)
        for pos in rng.sample(range(loaded.block_length), weight):
            delta = rng.randrange(1, loaded.q)
            w[pos] = (w[pos] + delta) % loaded.q
        start = time.perf_counter()
        out = loaded.decode(w)
        dec_time += time.perf_counter() - start
        if out is FAIL or out.message != msg:
            print(f"bench: decode mismatch at weight {weight}", file=sys.stderr)
            return 1
    print(
        f"{args.trials} trials at error weight {weight}: "
        f"encode {enc_time / args.trials * 1000:.3f} ms, "
        f"decode {dec_time / args.trials * 1000:.3f} ms"
    )
    return 0


def main(argv=None) -> int:
    parser = _Parser(prog="dccodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write its descriptor")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--q", type=int, help="field size (sidon-dc, wozencraft)")
    p.add_argument("--k", type=int, help="circulant size (sidon-dc, wozencraft)")
    p.add_argument("--m", type=int, help="number of variables (rm-dc)")
    p.add_argument("--r", type=int, help="order parameter (rm-dc, default m//2)")
    p.add_argument(
        "--sidon",
        type=lambda s: [int(v) for v in s.split(",")],
        help="comma-separated Sidon set elements (default: largest fitting set)",
    )
    p.add_argument("-o", "--out", help="descriptor output path (default stdout)")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("encode", help="encode message lines to word lines")
    p.add_argument("descriptor")
    p.add_argument("--in", dest="infile", help="message file (default stdin)")
    p.add_argument("--out", help="word file (default stdout)")
    p.set_defaults(fn=_cmd_encode)

    p = sub.add_parser("decode", help="decode word lines to message lines")
    p.add_argument("descriptor")
    p.add_argument("--in", dest="infile", help="word file (default stdin)")
    p.add_argument("--out", help="message file (default stdout)")
    p.set_defaults(fn=_cmd_decode)

    p = sub.add_parser("analyze", help="report certified bounds and oracle values")
    p.add_argument("descriptor")
    p.add_argument("--exact-distance", action="store_true")
    p.add_argument("--balanced", action="store_true")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("params", help="parameter searches")
    psub = p.add_subparsers(dest="params_command", required=True)
    pf = psub.add_parser("find-k", help="smallest valid quotient-field k")
    pf.add_argument("--q", type=int, required=True)
    pf.add_argument("--min", type=int, required=True)
    pf.add_argument("--limit", type=int, default=10**6)
    pf.set_defaults(fn=_cmd_params_find_k)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", help="comma-separated criterion names")
    p.add_argument("--list", action="store_true", help="list criteria and exit")
    p.set_defaults(fn=_cmd_selftest)

    p = sub.add_parser("bench", help="time encode/decode on random words")
    p.add_argument("descriptor")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(fn=_cmd_bench)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
