"""Command-line front end: ``ccodec <subcommand> --spec spec.json ...``.

Exit codes: 1 usage, 2 spec error, 3 word/rank not admissible, 4 file format
or fingerprint error, 5 selftest failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .automaton import compile_spec
from .codec import Code, decode_stream, encode_stream
from .constraints import load_spec
from .counting import (
    build_count_table,
    deserialize_table,
    payload_width,
    prefix_count,
    serialize_table,
)
from .errors import (
    EmptyLanguage,
    FingerprintMismatch,
    FormatError,
    LengthMismatch,
    NotInLanguage,
    RankOutOfRange,
    RankOverflow,
    SpecError,
    TooLarge,
    UnknownLetter,
)
from .oracle import enumerate_language
from .selftest import Report, check_spec, run_grid

log = logging.getLogger("ccodec")

EXIT_CODES = [
    (SpecError, 2),
    ((NotInLanguage, RankOutOfRange, RankOverflow, UnknownLetter, LengthMismatch, EmptyLanguage, TooLarge), 3),
    ((FormatError, FingerprintMismatch), 4),
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_letters(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"letters must be comma-separated integers, got {text!r}") from None


def _fmt(word) -> str:
    return ",".join(map(str, word))


def load_code(args) -> Code:
    spec = load_spec(args.spec)
    aut = compile_spec(spec)
    fp = spec.fingerprint()
    table = None
    path = Path(args.table) if args.table else None
    if path is not None and path.exists():
        try:
            table = deserialize_table(path.read_bytes(), fingerprint=fp, aut=aut)
        except (FormatError, FingerprintMismatch) as exc:
            log.warning("ignoring cached table %s (%s); rebuilding", path, exc)
    if table is None:
        table = build_count_table(aut, spec.length, fp)
        if path is not None:
            path.write_bytes(serialize_table(table))
    return Code(spec, aut, table)


def cmd_count(args, out):
    code = load_code(args)
    print(prefix_count(code.table, code.automaton, parse_letters(args.prefix)), file=out)


def cmd_info(args, out):
    code = load_code(args)
    print(f"size {code.size}", file=out)
    if code.size:
        k, width = payload_width(code.size)
        print(f"k {k}", file=out)
        print(f"rank_width {width}", file=out)
    else:
        print("k -", file=out)
        print("rank_width -", file=out)
    print(f"states {code.automaton.state_count}", file=out)
    if args.dump_automaton:
        print(code.automaton.dump(), file=out)


def cmd_rank(args, out):
    print(load_code(args).rank(parse_letters(args.word)), file=out)


def cmd_unrank(args, out):
    try:
        r = int(args.rank)
    except ValueError:
        raise UsageError(f"rank must be a decimal integer, got {args.rank!r}") from None
    print(_fmt(load_code(args).unrank(r)), file=out)


def cmd_encode(args, out):
    code = load_code(args)
    if args.hex is not None:
        try:
            payload = bytes.fromhex(args.hex)
        except ValueError:
            raise UsageError("--hex expects hexadecimal digits") from None
    elif args.infile:
        payload = Path(args.infile).read_bytes()
    else:
        raise UsageError("encode needs --in or --hex")
    blob = encode_stream(code.spec, payload, code)
    if args.outfile:
        Path(args.outfile).write_bytes(blob)
    else:
        sys.stdout.buffer.write(blob)


def cmd_decode(args, out):
    code = load_code(args)
    if not args.infile:
        raise UsageError("decode needs --in")
    payload = decode_stream(code.spec, Path(args.infile).read_bytes(), code)
    if args.outfile:
        Path(args.outfile).write_bytes(payload)
    else:
        print(payload.hex(), file=out)


def cmd_enumerate(args, out):
    spec = load_spec(args.spec)
    words = enumerate_language(spec)
    for w in words[: args.limit] if args.limit is not None else words:
        print(_fmt(w), file=out)


def cmd_selftest(args, out):
    spec = load_spec(args.spec)
    rep = Report()
    for n in range(1, min(args.max_n, spec.length) + 1):
        try:
            candidate = spec.with_length(n)
            compile_spec(candidate)
        except SpecError:
            continue  # block size does not divide n
        rep.merge(check_spec(candidate, "spec"))
    rep.merge(run_grid(args.max_n))
    for line in rep.mismatches:
        print(f"MISMATCH {line}", file=out)
    status = "ok" if rep.ok else "FAILED"
    print(
        f"selftest {status}: {rep.checked} prefix counts, {rep.table_checked} table-oracle checks, "
        f"{len(rep.mismatches)} mismatches",
        file=out,
    )
    return 0 if rep.ok else 5


def cmd_dump(args, out):
    print(compile_spec(load_spec(args.spec)).dump(), file=out)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--spec", required=True, help="constraint spec JSON file")
    common.add_argument("--table", help="count table cache (loaded if valid, else rebuilt and saved)")

    parser = _Parser(prog="ccodec", description="Enumerative codec for constrained sequences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common], help="print N(prefix); empty prefix gives |S|")
    p.add_argument("--prefix", default="", help="comma-separated letters, e.g. 1,-1,1")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("info", parents=[common], help="language size, payload width, state count")
    p.add_argument("--dump-automaton", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("rank", parents=[common], help="rank of a codeword")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", parents=[common], help="codeword with a given rank")
    p.add_argument("--rank", required=True)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("encode", parents=[common], help="payload -> CCF1 container")
    p.add_argument("--in", dest="infile")
    p.add_argument("--hex", help="payload given as hex instead of a file")
    p.add_argument("--out", dest="outfile")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="CCF1 container -> payload (hex if no --out)")
    p.add_argument("--in", dest="infile")
    p.add_argument("--out", dest="outfile")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("enumerate", parents=[common], help="list codewords in rank order (brute force)")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("selftest", parents=[common], help="check against the oracles")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("dump-automaton", parents=[common], help="print the compiled automaton")
    p.set_defaults(func=cmd_dump)

    sub.add_parser("help", help="show this message").set_defaults(func=None)
    return parser


LETTER_OPTIONS = ("--prefix", "--word", "--rank")


def _glue_negative_values(argv):
    # "--word -1,1" would otherwise parse -1,1 as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in LETTER_OPTIONS:
            nxt = next(it, None)
            if nxt is not None:
                tok = f"{tok}={nxt}"
        out.append(tok)
    return out


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.func is None:
            parser.print_help(out)
            return 0
        return args.func(args, out) or 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except Exception as exc:
        for kinds, code in EXIT_CODES:
            if isinstance(exc, kinds):
                print(f"{type(exc).__name__}: {exc}", file=err)
                return code
        raise


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
