"""Command-line front door.

One query per invocation, one machine-readable result line, exit codes
0 = yes/value, 1 = no, 2 = unknown, 3 = usage or parse error.  The exit
code depends on the verdict only, never on which strategy produced it.
"""

from __future__ import annotations

import argparse
import sys

from .area import Presentation, area_bounded, dehn_function, rel_cyclics_dehn
from .brute import (
    brute_area,
    brute_p_conjugacy,
    brute_power,
    brute_primitive_root,
    random_instances,
)
from .decisions import OracleUnknown
from .oracle import (
    KINDS,
    auto_strategy,
    make_strategy,
    power_decide,
    wp_decide,
)
from .perturb import (
    KMaxExhausted,
    PerturbConfig,
    SearchBudgetExceeded,
    power_avoid,
)
from .subdirect import PairElement, canonical_setup, p_conjugacy, p_membership
from .words import (
    free_conjugator,
    free_reduce,
    parse_word,
    primitive_root,
    random_reduced_word,
    validate_word,
    word_str,
)


class CLIError(Exception):
    """Input problem with an optional source location."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            loc = f"line {line}" + (f", column {col}" if col is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)


def parse_presentation(text: str) -> Presentation:
    """Parse the two-line presentation grammar with located diagnostics."""
    gens: str | None = None
    gens_line = 0
    relators: list[str] = []
    saw_relators = False
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        col0 = raw.index(stripped[0]) + 1
        if stripped.startswith("generators:"):
            if gens is not None:
                raise CLIError("duplicate generators line", ln, col0)
            payload = stripped[len("generators:") :]
            symbols = payload.split()
            if not symbols:
                raise CLIError("no generators declared", ln, col0)
            seen = []
            for sym in symbols:
                col = raw.index(sym, raw.index(":") + 1) + 1
                if len(sym) != 1 or not ("a" <= sym <= "z"):
                    raise CLIError(
                        f"generator {sym!r} must be one lowercase letter", ln, col
                    )
                if sym in seen:
                    raise CLIError(f"duplicate generator {sym!r}", ln, col)
                seen.append(sym)
            gens = "".join(seen)
            gens_line = ln
        elif stripped.startswith("relators:"):
            if saw_relators:
                raise CLIError("duplicate relators line", ln, col0)
            saw_relators = True
            payload = stripped[len("relators:") :].strip()
            if not payload:
                continue
            pos = raw.index(":") + 1
            for item in payload.split(","):
                token = item.strip()
                if not token:
                    raise CLIError("empty relator entry", ln, pos + 1)
                col = raw.index(token, pos) + 1
                pos = col - 1 + len(token)
                relators.append((token, ln, col))
        else:
            raise CLIError(
                "expected a 'generators:' or 'relators:' line", ln, col0
            )
    if gens is None:
        raise CLIError("missing generators line")
    words = []
    for token, ln, col in relators:
        try:
            w = parse_word(token)
            validate_word(w, gens)
        except ValueError as exc:
            raise CLIError(str(exc), ln, col)
        if w == "":
            raise CLIError("relator is empty", ln, col)
        if free_reduce(w) != w:
            raise CLIError(f"relator {token!r} is not freely reduced", ln, col)
        if len(w) > 1 and w[0] == w[-1].swapcase():
            raise CLIError(f"relator {token!r} is not cyclically reduced", ln, col)
        words.append(w)
    try:
        return Presentation(gens, tuple(words))
    except ValueError as exc:
        raise CLIError(str(exc), gens_line or 1)


def parse_presentation_file(path: str) -> Presentation:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CLIError(f"cannot read presentation file: {exc}")
    return parse_presentation(text)


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit 2 by default; we need 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fibreconj")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--presentation", required=True)
    common.add_argument("--oracle", choices=KINDS)
    common.add_argument("--budget", type=int, default=1_000_000)
    common.add_argument("--show-certificate", action="store_true")
    common.add_argument("--structured", action="store_true")

    free_common = argparse.ArgumentParser(add_help=False)
    free_common.add_argument("-p", "--presentation")
    free_common.add_argument("--structured", action="store_true")

    p = sub.add_parser("wp", parents=[common])
    p.add_argument("-w", "--word", required=True)

    p = sub.add_parser("area", parents=[common])
    p.add_argument("-w", "--word", required=True)

    p = sub.add_parser("dehn", parents=[common])
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("reldehn", parents=[common])
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("member", parents=[common])
    p.add_argument("-u", required=True)
    p.add_argument("-v", required=True)

    p = sub.add_parser("conj", parents=[common])
    p.add_argument("--u1", required=True)
    p.add_argument("--u2", required=True)
    p.add_argument("--v1", required=True)
    p.add_argument("--v2", required=True)

    p = sub.add_parser("power", parents=[common])
    p.add_argument("-w", "--word", required=True)
    p.add_argument("-u", required=True)

    p = sub.add_parser("perturb", parents=[common])
    p.add_argument("-w", "--word", required=True)
    p.add_argument("--threshold", type=int, default=1)
    p.add_argument("--kmax", type=int, default=8)

    p = sub.add_parser("root", parents=[free_common])
    p.add_argument("-w", "--word", required=True)

    p = sub.add_parser("fconj", parents=[free_common])
    p.add_argument("-u", required=True)
    p.add_argument("-v", required=True)

    sub.add_parser("gens", parents=[common])

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("what", choices=["area", "conj", "power", "root"])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=6)

    return parser


def _strategy(pres: Presentation, args):
    if args.oracle:
        return make_strategy(pres, args.oracle, args.budget)
    return auto_strategy(pres, args.budget)


def _word_arg(s: str, pres: Presentation | None) -> str:
    w = parse_word(s)
    validate_word(w, pres.generators if pres else None)
    return w


def _emit(args, plain: str, pairs: list[tuple[str, str]]):
    if getattr(args, "structured", False):
        print(" ".join(f"{k}={v}" for k, v in pairs))
    else:
        print(plain)


def _verdict_exit(verdict) -> int:
    from .decisions import Verdict

    if verdict is Verdict.YES:
        return 0
    if verdict is Verdict.NO:
        return 1
    return 2


def _pair_str(pair) -> str:
    return f"({word_str(pair[0])}; {word_str(pair[1])})"


def _run_wp(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    w = _word_arg(args.word, pres)
    dec = wp_decide(w, pres, strat)
    _emit(args, dec.verdict.name, [("command", "wp"), ("word", word_str(w)),
                                   ("verdict", dec.verdict.name)])
    if args.show_certificate and dec.certificate is not None:
        print(f"certificate: {dec.certificate!r}")
    return _verdict_exit(dec.verdict)


def _run_area(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    w = _word_arg(args.word, pres)
    dec = wp_decide(w, pres, strat)
    if dec.no:
        _emit(args, "NO", [("command", "area"), ("word", word_str(w)), ("verdict", "NO")])
        return 1
    if dec.unknown:
        _emit(args, "UNKNOWN", [("command", "area"), ("word", word_str(w)),
                                ("verdict", "UNKNOWN")])
        return 2
    res = area_bounded(w, None, pres, state_budget=args.budget)
    if res.value is None:
        _emit(args, "UNKNOWN", [("command", "area"), ("word", word_str(w)),
                                ("verdict", "UNKNOWN")])
        return 2
    _emit(args, f"AREA {word_str(w)} = {res.value}",
          [("command", "area"), ("word", word_str(w)), ("value", str(res.value))])
    if args.show_certificate and res.witness is not None:
        for theta, rel in res.witness.factors:
            print(f"({word_str(theta)}; {word_str(rel)})")
    return 0


def _run_dehn(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    value = dehn_function(args.n, pres, lambda w: wp_decide(w, pres, strat))
    _emit(args, f"DELTA {args.n} = {value}",
          [("command", "dehn"), ("n", str(args.n)), ("value", str(value))])
    return 0


def _run_reldehn(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    value = rel_cyclics_dehn(
        args.n,
        pres,
        lambda w, u: power_decide(w, u, pres, strat),
        lambda w: wp_decide(w, pres, strat),
    )
    _emit(args, f"DELTAC {args.n} = {value}",
          [("command", "reldehn"), ("n", str(args.n)), ("value", str(value))])
    return 0


def _run_member(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    setup = canonical_setup(pres)
    pair = (_word_arg(args.u, pres), _word_arg(args.v, pres))
    dec = p_membership(pair, setup, strat)
    _emit(args, dec.verdict.name, [("command", "member"), ("first", word_str(pair[0])),
                                   ("second", word_str(pair[1])),
                                   ("verdict", dec.verdict.name)])
    if args.show_certificate and dec.certificate is not None:
        print(f"certificate: {dec.certificate!r}")
    return _verdict_exit(dec.verdict)


def _run_conj(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    setup = canonical_setup(pres)
    U = (_word_arg(args.u1, pres), _word_arg(args.u2, pres))
    V = (_word_arg(args.v1, pres), _word_arg(args.v2, pres))
    try:
        res = p_conjugacy(U, V, setup, strat)
    except ValueError as exc:
        raise CLIError(str(exc))
    if res.yes:
        plain = f"YES {_pair_str(res.conjugator)}"
        pairs = [("command", "conj"), ("verdict", "YES"),
                 ("gamma1", word_str(res.conjugator[0])),
                 ("gamma2", word_str(res.conjugator[1]))]
    else:
        plain = res.verdict.name
        pairs = [("command", "conj"), ("verdict", res.verdict.name)]
    _emit(args, plain, pairs)
    if args.show_certificate:
        t = res.trace
        print(f"branch: {t.branch}")
        if t.branch == "main":
            print(f"x1={word_str(t.x1)} x2={word_str(t.x2)} w={word_str(t.w)}")
            print(f"z1={word_str(t.z1)}^{t.e1} z2={word_str(t.z2)}^{t.e2}")
            for q in t.queries:
                print(f"query j={q.j} target={word_str(q.target)} "
                      f"verdict={q.verdict.name} p={q.p}")
            print(f"winner: {t.winner}")
    return _verdict_exit(res.verdict)


def _run_power(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    w = _word_arg(args.word, pres)
    u = _word_arg(args.u, pres)
    pd = power_decide(w, u, pres, strat)
    if pd.yes:
        plain = f"YES p={pd.p}"
        pairs = [("command", "power"), ("verdict", "YES"), ("p", str(pd.p))]
    else:
        plain = pd.verdict.name
        pairs = [("command", "power"), ("verdict", pd.verdict.name)]
    _emit(args, plain, pairs)
    if args.show_certificate and pd.certificate is not None:
        print(f"certificate: {pd.certificate!r}")
    return _verdict_exit(pd.verdict)


def _run_perturb(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    setup = canonical_setup(pres)
    w = _word_arg(args.word, pres)
    cfg = PerturbConfig(threshold=args.threshold, k_max=args.kmax)
    res = power_avoid(w, cfg, setup, strat)
    if res.perturbed:
        _emit(args, f"PERTURBED {word_str(res.word)} K={res.k}",
              [("command", "perturb"), ("outcome", "perturbed"),
               ("word", word_str(res.word)), ("k", str(res.k))])
    else:
        _emit(args, f"EXCEPTIONAL {word_str(res.word)}",
              [("command", "perturb"), ("outcome", "exceptional"),
               ("word", word_str(res.word))])
    return 0


def _run_root(args) -> int:
    pres = parse_presentation_file(args.presentation) if args.presentation else None
    w = _word_arg(args.word, pres)
    if free_reduce(w) == "":
        raise CLIError("the empty word has no root decomposition")
    dec = primitive_root(free_reduce(w))
    _emit(args, f"ROOT {word_str(w)} = {word_str(dec.root)}^{dec.exponent}",
          [("command", "root"), ("word", word_str(w)),
           ("root", word_str(dec.root)), ("exponent", str(dec.exponent))])
    return 0


def _run_fconj(args) -> int:
    pres = parse_presentation_file(args.presentation) if args.presentation else None
    u = _word_arg(args.u, pres)
    v = _word_arg(args.v, pres)
    x = free_conjugator(u, v)
    if x is None:
        _emit(args, "NO", [("command", "fconj"), ("verdict", "NO")])
        return 1
    _emit(args, f"YES {word_str(x)}",
          [("command", "fconj"), ("verdict", "YES"), ("conjugator", word_str(x))])
    return 0


def _run_gens(args) -> int:
    pres = parse_presentation_file(args.presentation)
    setup = canonical_setup(pres)
    for pair in setup.p_generators:
        print(_pair_str(pair))
    return 0


def _run_verify(args) -> int:
    pres = parse_presentation_file(args.presentation)
    strat = _strategy(pres, args)
    instances = agreements = disagreements = unknowns = 0

    if args.what == "area":
        from .words import reduced_words

        for w in reduced_words(pres.generators, args.max_len):
            dec = wp_decide(w, pres, strat)
            if dec.unknown:
                unknowns += 1
                continue
            if dec.no:
                continue
            instances += 1
            mine = area_bounded(w, None, pres, state_budget=args.budget).value
            ref = brute_area(w, pres, max_states=args.budget)
            if mine is None or ref is None:
                unknowns += 1
            elif mine == ref:
                agreements += 1
            else:
                disagreements += 1
                print(f"disagree word={word_str(w)} engine={mine} brute={ref}")
    elif args.what == "conj":
        setup = canonical_setup(pres)
        for inst in random_instances(setup, args.seed, args.count,
                                     max_len=args.max_len):
            instances += 1
            res = p_conjugacy(inst.pair_u, inst.pair_v, setup, strat)
            ref = brute_p_conjugacy(inst.pair_u, inst.pair_v, setup)
            if res.unknown:
                unknowns += 1
                continue
            if res.yes and ref.status == "FOUND":
                agreements += 1
            elif res.no and ref.status == "FOUND":
                disagreements += 1
                print(f"disagree U={_pair_str(inst.pair_u)} V={_pair_str(inst.pair_v)}")
            else:
                agreements += 1
    elif args.what == "power":
        import random as _random

        rng = _random.Random(args.seed)
        for _ in range(args.count):
            w = random_reduced_word(rng, pres.generators, rng.randint(0, args.max_len))
            u = random_reduced_word(rng, pres.generators, rng.randint(1, args.max_len))
            instances += 1
            pd = power_decide(w, u, pres, strat)
            if pd.unknown:
                unknowns += 1
                continue
            ref = brute_power(w, u, pres, strat, max_abs_p=16)
            if pd.yes and ref == pd.p:
                agreements += 1
            elif pd.no and ref is None:
                agreements += 1
            else:
                disagreements += 1
                print(f"disagree w={word_str(w)} u={word_str(u)} "
                      f"engine={pd.verdict.name}:{pd.p} brute={ref}")
    else:
        import random as _random

        rng = _random.Random(args.seed)
        alphabet = pres.generators
        for _ in range(args.count):
            w = random_reduced_word(rng, alphabet, rng.randint(1, args.max_len))
            instances += 1
            mine = primitive_root(w)
            root, e = brute_primitive_root(w)
            if (mine.root, mine.exponent) == (root, e):
                agreements += 1
            else:
                disagreements += 1
                print(f"disagree word={word_str(w)} engine={word_str(mine.root)}^"
                      f"{mine.exponent} brute={word_str(root)}^{e}")

    print(f"RESULT instances={instances} agreements={agreements} "
          f"disagreements={disagreements} unknowns={unknowns}")
    return 0 if disagreements == 0 else 1


_RUNNERS = {
    "wp": _run_wp,
    "area": _run_area,
    "dehn": _run_dehn,
    "reldehn": _run_reldehn,
    "member": _run_member,
    "conj": _run_conj,
    "power": _run_power,
    "perturb": _run_perturb,
    "root": _run_root,
    "fconj": _run_fconj,
    "gens": _run_gens,
    "verify": _run_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 3
    try:
        return _RUNNERS[args.command](args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (KMaxExhausted, SearchBudgetExceeded) as exc:
        print(f"UNKNOWN {exc}")
        return 2
    except OracleUnknown as exc:
        print(f"UNKNOWN {exc}")
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
