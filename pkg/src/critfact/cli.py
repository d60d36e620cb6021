"""critfact command line: profile, global, enumerate, generate, verify, explore.

Exit codes: 0 success (and verify PASS), 1 verify FAIL, 2 usage or
resource errors.  ``--json`` emits a single well-formed document per
invocation; ``--csv`` is available for profiles; default output is a
short plain rendering.  ``--out PATH`` redirects the document to a file.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import DEFAULT_LIMITS
from .errors import CritfactError
from .periods import (
    critical_interval,
    is_unimodal,
    profile,
    profile_csv_rows,
    profile_json_dict,
)
from .squarefree import is_square_free, square_free_words
from .thue import (
    alpha_n,
    beta_family,
    beta_n,
    construct_wx,
    m_n,
    m_prefix,
    tau_iter,
    x_n,
)
from .verify import (
    TheoremId,
    VerifyOptions,
    explore_problem1,
    explore_problem2,
    verify,
    verify_alpha_extremal,
    verify_beta_eta,
    verify_wx_density,
)
from .words import global_period, parse_word

_CONSOLE_CE_LIMIT = 10


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--csv", action="store_true", help="emit CSV where supported")
    common.add_argument("--out", metavar="PATH", help="write output to a file")
    common.add_argument("--jobs", type=int, default=1, metavar="K",
                        help="worker processes for enumerate/verify")
    common.add_argument("--max-words", type=int, default=None, metavar="N",
                        help="override the enumeration ceiling")

    top = argparse.ArgumentParser(prog="critfact",
                                  description="critical factorisation toolkit")
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("profile", parents=[common], help="period profile of words")
    p.add_argument("word", nargs="?", help="word as a digit string")
    p.add_argument("--file", metavar="PATH", help="read one word per line")

    g = sub.add_parser("global", parents=[common], help="global period of a word")
    g.add_argument("word")

    e = sub.add_parser("enumerate", parents=[common],
                       help="square-free ternary words of one length")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--count-only", action="store_true")

    gen = sub.add_parser("generate", parents=[common], help="generated word families")
    gsub = gen.add_subparsers(dest="family", required=True)
    fam = gsub.add_parser("m-prefix", parents=[common])
    fam.add_argument("--len", type=int, required=True, dest="length")
    for name in ("tau", "mn", "alpha", "beta", "wx"):
        fam = gsub.add_parser(name, parents=[common])
        fam.add_argument("--n", type=int, required=True)
    fam = gsub.add_parser("wx-of", parents=[common])
    fam.add_argument("--x", required=True)
    fam = gsub.add_parser("beta-family", parents=[common])
    fam.add_argument("--count", type=int, required=True)
    fam.add_argument("--bound", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("theorem", choices=[t.value for t in TheoremId])
    v.add_argument("--min", type=int, dest="min_len")
    v.add_argument("--max", type=int, dest="max_len")
    v.add_argument("--alphabet", default="012")
    v.add_argument("--count", type=int, default=3, help="beta-eta family size")
    v.add_argument("--bound", type=int, default=10000, help="beta-eta search bound")
    v.add_argument("--n", type=int, default=4, help="wx-density n_max")

    x = sub.add_parser("explore", parents=[common], help="open-problem searches")
    x.add_argument("problem", choices=["problem1", "problem2"])
    x.add_argument("--min", type=int, dest="min_len", default=1)
    x.add_argument("--max", type=int, dest="max_len", required=True)
    return top


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _profile_plain(prof) -> str:
    lines = [
        f"word          {prof.word}",
        f"length        {len(prof.word)}",
        f"period        {prof.period}",
        f"localPeriods  {' '.join(str(v) for v in prof.local_periods)}",
        f"critical      {' '.join(str(p) for p in prof.critical_points)}",
        f"eta           {prof.eta}",
        f"density       {prof.eta}/{len(prof.word) - 1}",
        f"midpoint      {prof.midpoint}",
        f"unimodal      {is_unimodal(prof)}",
        f"interval      {critical_interval(prof)}",
    ]
    return "\n".join(lines)


def _profile_csv(profs) -> str:
    header = "p,localPeriod,u,leftOverflow,rightOverflow,critical"
    many = len(profs) > 1
    if many:
        header = "word," + header
    lines = [header]
    for prof in profs:
        for row in profile_csv_rows(prof):
            cells = [str(row[0]), str(row[1]), row[2]] + [
                "true" if b else "false" for b in row[3:]
            ]
            if many:
                cells.insert(0, prof.word)
            lines.append(",".join(cells))
    return "\n".join(lines)


def _cmd_profile(args) -> int:
    words = []
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                w = line.rstrip("\n")
                if not w:
                    raise CritfactError(f"{args.file}:{lineno}: empty word")
                words.append(parse_word(w))
    elif args.word is not None:
        words.append(parse_word(args.word))
    else:
        raise CritfactError("profile needs a WORD argument or --file PATH")
    profs = [profile(w) for w in words]
    if args.json:
        docs = [profile_json_dict(p) for p in profs]
        _emit(args, json.dumps(docs[0] if len(docs) == 1 else docs, indent=2))
    elif args.csv:
        _emit(args, _profile_csv(profs))
    else:
        _emit(args, "\n\n".join(_profile_plain(p) for p in profs))
    return 0


def _cmd_global(args) -> int:
    w = parse_word(args.word)
    per = global_period(w)
    if args.json:
        doc = {"word": w, "period": per, "unbordered": per == len(w)}
        _emit(args, json.dumps(doc, indent=2))
    else:
        _emit(args, str(per))
    return 0


def _cmd_enumerate(args) -> int:
    ceiling = args.max_words if args.max_words is not None else DEFAULT_LIMITS.max_words
    count = 0
    lines = []
    for w in square_free_words(args.n):
        count += 1
        if count > ceiling:
            raise CritfactError(f"enumeration exceeded the ceiling of {ceiling} words")
        if not args.count_only:
            lines.append(w)
    if args.json:
        doc: dict = {"n": args.n, "count": count}
        if not args.count_only:
            doc["words"] = lines
        _emit(args, json.dumps(doc, indent=2))
    elif args.count_only:
        _emit(args, str(count))
    else:
        _emit(args, "\n".join(lines) if lines else "")
    return 0


def _cmd_generate(args) -> int:
    if args.family == "m-prefix":
        words = [m_prefix(args.length)]
        params: dict = {"len": args.length}
    elif args.family == "tau":
        words = [tau_iter("0", args.n)]
        params = {"n": args.n}
    elif args.family == "mn":
        words = [m_n(args.n)]
        params = {"n": args.n}
    elif args.family == "alpha":
        words = [alpha_n(args.n)]
        params = {"n": args.n}
    elif args.family == "beta":
        words = [beta_n(args.n)]
        params = {"n": args.n}
    elif args.family == "wx":
        words = [construct_wx(x_n(args.n))]
        params = {"n": args.n}
    elif args.family == "wx-of":
        words = [construct_wx(parse_word(args.x))]
        params = {"x": args.x}
    else:
        words = beta_family(args.count, args.bound)
        params = {"count": args.count, "bound": args.bound}
    if args.json:
        if len(words) == 1:
            w = words[0]
            doc: dict = {
                "family": args.family,
                "params": params,
                "length": len(w),
                "squareFree": is_square_free(w),
                "word": w,
            }
        else:
            doc = {
                "family": args.family,
                "params": params,
                "words": [
                    {"word": w, "length": len(w), "squareFree": is_square_free(w)}
                    for w in words
                ],
            }
        _emit(args, json.dumps(doc, indent=2))
    else:
        _emit(args, "\n".join(words))
    return 0


def _report_plain(report) -> str:
    lines = [
        f"theorem  {report.theorem}",
        f"range    {json.dumps(report.range)}",
        f"tested   {report.tested}",
        f"verdict  {report.verdict}",
    ]
    ces = report.counterexamples
    for w, detail in ces[:_CONSOLE_CE_LIMIT]:
        lines.append(f"  counterexample {w}: {detail}")
    if len(ces) > _CONSOLE_CE_LIMIT:
        lines.append(f"  ... {len(ces) - _CONSOLE_CE_LIMIT} more")
    return "\n".join(lines)


def _cmd_verify(args) -> int:
    tid = TheoremId(args.theorem)
    if tid is TheoremId.ALPHA_EXTREMAL:
        report = verify_alpha_extremal()
    elif tid is TheoremId.BETA_ETA:
        report = verify_beta_eta(args.count, args.bound)
    elif tid is TheoremId.WX_DENSITY:
        report = verify_wx_density(args.n)
    else:
        if args.min_len is None or args.max_len is None:
            raise CritfactError(f"verify {tid.value} needs --min and --max")
        opts = VerifyOptions(
            alphabet=args.alphabet,
            jobs=args.jobs,
            max_words=args.max_words,
        )
        report = verify(tid, args.min_len, args.max_len, opts)
    if args.json:
        _emit(args, json.dumps(report.to_json_dict(), indent=2))
    else:
        _emit(args, _report_plain(report))
    return 0 if report.verdict == "PASS" else 1


def _cmd_explore(args) -> int:
    if args.problem == "problem1":
        doc = explore_problem1(args.min_len, args.max_len, args.max_words)
    else:
        doc = explore_problem2(args.max_len, args.max_words)
    if args.json:
        _emit(args, json.dumps(doc, indent=2))
    else:
        lines = [f"problem  {doc['problem']}"]
        if "note" in doc:
            lines.append(f"note     {doc['note']}")
        for row in doc["lengths"]:
            lines.append("  " + json.dumps(row))
        _emit(args, "\n".join(lines))
    return 0


_DISPATCH = {
    "profile": _cmd_profile,
    "global": _cmd_global,
    "enumerate": _cmd_enumerate,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "explore": _cmd_explore,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _DISPATCH[args.verb](args)
    except CritfactError as exc:
        print(f"critfact: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"critfact: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
