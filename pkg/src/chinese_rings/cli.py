"""Command line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .connection import INFINITY, brute_force_norm, min_norm, subset_oracle
from .norm import ElementaryOp, metric, oracle_sample_word, relator_norm, verify_witness
from .rings import (
    MAX_ARC_N,
    arc_word,
    check_arc_word,
    complexity,
    untangle_witness,
)
from .words import EMPTY, Word, format_word, free_reduce, parse

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    output_mode: str = "text"
    seed: int = 0
    relator: int | None = None


def _value(v):
    return "inf" if v == INFINITY else int(v)


def _emit(cfg: CliConfig, payload: dict, text: str) -> None:
    if cfg.output_mode == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}))
    else:
        print(text)


def _words(args, count: int) -> list[Word]:
    texts = list(args.words)
    if args.file is not None:
        if texts:
            raise UsageError("give words either inline or with --file, not both")
        raw = Path(args.file).read_text(encoding="utf-8")
        texts = [line for line in raw.splitlines() if line.strip()] if count > 1 else [raw]
    if len(texts) != count:
        raise UsageError(f"expected {count} word(s), got {len(texts)}")
    return [parse(t) for t in texts]


def _relator(cfg: CliConfig, *words: Word) -> int:
    if cfg.relator is not None:
        if cfg.relator < 1:
            raise UsageError("--relator must be >= 1")
        return cfg.relator
    return max(1, *(w.max_generator for w in words))


def _ops_json(ops: list[ElementaryOp] | None) -> list[dict] | None:
    return None if ops is None else [op.to_dict() for op in ops]


def cmd_reduce(args, cfg) -> int:
    (w,) = _words(args, 1)
    r = free_reduce(w)
    _emit(cfg, {"word": format_word(r), "length": len(r)}, format_word(r))
    return EXIT_OK


def cmd_arcword(args, cfg) -> int:
    if not 1 <= args.n <= MAX_ARC_N:
        raise UsageError(f"n must be in 1..{MAX_ARC_N}")
    a = arc_word(args.n)
    _emit(cfg, {"n": args.n, "word": format_word(a), "length": len(a)}, format_word(a))
    return EXIT_OK


def cmd_complexity(args, cfg) -> int:
    try:
        c = complexity(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(cfg, {"n": args.n, "complexity": c}, str(c))
    return EXIT_OK


def cmd_norm(args, cfg) -> int:
    (w,) = _words(args, 1)
    d = _relator(cfg, w)
    res = relator_norm(w, d)
    payload = {
        "relator": d,
        "value": _value(res.value),
        "connection": res.connection.to_dict() if res.connection else None,
        "ops": _ops_json(res.witness_ops),
    }
    text = str(_value(res.value))
    if args.witness and res.connection is not None:
        text += "\n" + json.dumps(res.connection.to_dict())
    _emit(cfg, payload, text)
    return EXIT_OK


def cmd_metric(args, cfg) -> int:
    x, y = _words(args, 2)
    d = _relator(cfg, x, y)
    res = metric(x, y, d)
    payload = {
        "relator": d,
        "value": _value(res.value),
        "product": format_word(res.word) if res.word is not None else None,
        "ops": _ops_json(res.witness_ops),
    }
    _emit(cfg, payload, str(_value(res.value)))
    return EXIT_OK


def cmd_witness(args, cfg) -> int:
    (w,) = _words(args, 1)
    d = _relator(cfg, w)
    res = relator_norm(w, d)
    if res.witness_ops is None:
        _emit(cfg, {"relator": d, "value": "inf", "ops": None}, "inf")
        return EXIT_OK
    lines = [f"{op.kind} {op.position} sign={op.sign:+d} conjugator={format_word(op.conjugator)}" for op in res.witness_ops]
    ok = verify_witness(w, res.witness_ops, EMPTY, d)
    payload = {"relator": d, "value": _value(res.value), "ops": _ops_json(res.witness_ops), "verified": ok}
    _emit(cfg, payload, "\n".join([str(res.value), *lines]))
    return EXIT_OK if ok else EXIT_FAIL


def verify_rows(max_n: int) -> list[dict]:
    rows = []
    for n in range(2, max_n + 1):
        t0 = time.perf_counter()
        report = check_arc_word(n)
        a, prev = arc_word(n), arc_word(n - 1)
        expected = complexity(n)
        res = metric(a, prev, n)
        positions = untangle_witness(n)
        untangle = [ElementaryOp("delete", p, 1 if a.codes[p - 1] > 0 else -1, a[: p - 1]) for p in reversed(positions)]
        untangle_ok = len(untangle) == expected and verify_witness(a, untangle, prev, n)
        ops_ok = (
            res.witness_ops is not None
            and len(res.witness_ops) == res.value
            and verify_witness(res.word, res.witness_ops, EMPTY, n)
        )
        rows.append(
            {
                "n": n,
                "expected": expected,
                "metric": _value(res.value),
                "arc_length": report.arc_length,
                "g_n_count": report.g_n_count,
                "arc_word_ok": report.ok,
                "untangle_ok": untangle_ok,
                "witness_ok": ops_ok,
                "seconds": round(time.perf_counter() - t0, 4),
                "pass": report.ok and res.value == expected and untangle_ok and ops_ok,
            }
        )
    return rows


def cmd_verify(args, cfg) -> int:
    if not 2 <= args.max_n <= 8:
        raise UsageError("--max-n must be in 2..8")
    rows = verify_rows(args.max_n)
    ok = all(r["pass"] for r in rows)
    lines = [f"{'n':>2} {'2^(n-1)':>8} {'metric':>7} {'|a_n|':>6}  arc  untangle  witness  result"]
    for r in rows:
        flags = ["ok" if r[k] else "BAD" for k in ("arc_word_ok", "untangle_ok", "witness_ok")]
        lines.append(
            f"{r['n']:>2} {r['expected']:>8} {r['metric']:>7} {r['arc_length']:>6}  {flags[0]:<3}  {flags[1]:<8}  {flags[2]:<7}  "
            + ("PASS" if r["pass"] else "FAIL")
        )
    lines.append("ALL PASS" if ok else "FAILED")
    _emit(cfg, {"rows": rows, "pass": ok}, "\n".join(lines))
    if not ok:
        bad = next(r for r in rows if not r["pass"])
        print(f"mismatch at n={bad['n']}: metric={bad['metric']} expected={bad['expected']}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def oracle_check(trials: int, max_len: int, seed: int) -> tuple[int, dict | None]:
    """Compare the DP, full enumeration and subset oracle on random words.

    Returns the number of trials run and the first disagreement, if any.
    """
    rng = random.Random(seed)
    for t in range(trials):
        w = oracle_sample_word(rng, max_len)
        dp = min_norm(w, 3).value
        enum = brute_force_norm(w, 3)
        subset = subset_oracle(w, 3)
        if not dp == enum == subset:
            return t + 1, {"word": format_word(w), "dp": _value(dp), "enumeration": _value(enum), "subset": _value(subset)}
    return trials, None


def cmd_oracle_check(args, cfg) -> int:
    if not 0 <= args.max_len <= 14:
        raise UsageError("--max-len must be in 0..14")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    seed = cfg.seed if args.oracle_seed is None else args.oracle_seed
    ran, bad = oracle_check(args.trials, args.max_len, seed)
    payload = {"trials": ran, "max_len": args.max_len, "seed": seed, "pass": bad is None, "disagreement": bad}
    text = f"oracle-check trials={ran} max_len={args.max_len} seed={seed}: " + ("PASS" if bad is None else "FAIL")
    _emit(cfg, payload, text)
    if bad is not None:
        print(f"disagreement on {bad['word']}: {bad}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--file", default=argparse.SUPPRESS, help="read word text from a file (one word per line for metric)")
    common.add_argument("--relator", type=int, default=argparse.SUPPRESS, help="distinguished generator index")

    p = argparse.ArgumentParser(prog="chinese-rings", description=__doc__, parents=[common])
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", parents=[common], help="freely reduce a word")
    s.add_argument("words", nargs="*", metavar="word")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("arcword", parents=[common], help="print the arc word a_n")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_arcword)

    s = sub.add_parser("complexity", parents=[common], help="minimal complexity 2^(n-1)")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_complexity)

    s = sub.add_parser("norm", parents=[common], help="conjugate-counting norm of a word")
    s.add_argument("words", nargs="*", metavar="word")
    s.add_argument("--witness", action="store_true", help="also print the minimal connection")
    s.set_defaults(func=cmd_norm)

    s = sub.add_parser("metric", parents=[common], help="distance between two words")
    s.add_argument("words", nargs="*", metavar="word")
    s.set_defaults(func=cmd_metric)

    s = sub.add_parser("witness", parents=[common], help="deletions realising the norm")
    s.add_argument("words", nargs="*", metavar="word")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("verify", parents=[common], help="check the 2^(n-1) bound for n = 2..N")
    s.add_argument("--max-n", type=int, default=8)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle-check", parents=[common], help="DP vs brute-force oracles on random words")
    s.add_argument("--trials", type=int, default=300)
    s.add_argument("--max-len", type=int, default=12)
    s.add_argument("--seed", type=int, default=None, dest="oracle_seed")
    s.set_defaults(func=cmd_oracle_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("json", False), ("file", None), ("relator", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    cfg = CliConfig(output_mode="json" if args.json else "text", seed=args.seed, relator=args.relator)
    try:
        return args.func(args, cfg)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
