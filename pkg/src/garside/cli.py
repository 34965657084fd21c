"""
cli: command-line surface for germs, normal forms, decompositions and
automata.

Words are '.'-separated simple names (`a.b.c`, `1` for the empty word);
normal forms are '|'-separated with an optional `D^k` power in front
(`D^1|ac|b`).  Exit codes: 0 success, 1 domain error (invalid germ,
impossible decomposition, ...), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import automata, element, normal_forms, quasicenter, suites, zappa_szep
from .builtins import germ_from_spec
from .element import NormalWord
from .germ import Germ, GermError, validate_germ
from .suites import GERM_SUITES, ZS_SUITES, Options
from .zappa_szep import ZSError, ZSStructure


class UsageError(Exception):
    pass


def parse_word(g: Germ, text: str) -> list[int]:
    """A '.'-separated word; "1" alone is the empty word, D^k a Delta power."""
    if text == "1":
        return []
    out = []
    for token in text.split("."):
        if token.startswith("D^"):
            try:
                k = int(token[2:])
            except ValueError:
                raise UsageError(f"bad Delta power {token!r}") from None
            if k < 0:
                raise UsageError("Delta power must be non-negative")
            out.extend([g.delta] * k)
            continue
        if token not in g.name_index:
            raise UsageError(f"unknown simple name {token!r}")
        out.append(g.name_index[token])
    return out


def format_word(g: Germ, word) -> str:
    return ".".join(g.names[s] for s in word) if word else "1"


def parse_nf_letters(g: Germ, text: str) -> list[int]:
    """A '|'-separated sequence of simple names; "1" is the empty word."""
    if text.strip() == "1":
        return []
    out = []
    for token in (t.strip() for t in text.split("|")):
        if token not in g.name_index:
            raise UsageError(f"unknown simple name {token!r}")
        out.append(g.name_index[token])
    return out


def format_factor_nf(g: Germ, delta: int, w: NormalWord) -> str:
    """Factor normal form with the factor Garside element as a letter."""
    word = (delta,) * w.deltas + w.factors
    return "|".join(g.names[s] for s in word) if word else "1"


def _germ(args) -> Germ:
    try:
        return germ_from_spec(args.germ)
    except ValueError as e:
        raise UsageError(str(e)) from None
    except OSError as e:
        raise GermError(f"cannot read germ file: {e}") from None


def _zs(args, g: Germ) -> ZSStructure:
    if not args.left:
        raise UsageError("this command needs --left with a comma-separated atom list")
    atoms = []
    for nm in args.left.split(","):
        nm = nm.strip()
        if nm not in g.name_index:
            raise UsageError(f"unknown atom name {nm!r}")
        atoms.append(g.name_index[nm])
    return zappa_szep.build(g, atoms)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (GermError, ZSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


run = main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="compute with finite Garside structures and their "
                    "two-sided decompositions")
    sub = parser.add_subparsers(dest="command")

    def cmd(name: str, fn, *, words: int = 0, left: bool = False, help: str = ""):
        p = sub.add_parser(name, help=help)
        p.add_argument("--germ", required=True,
                       help="wreath | braid:N | abelian:K | prod:SPEC,SPEC | file:PATH")
        if left:
            p.add_argument("--left", default=None,
                           help="comma-separated atoms generating the left factor")
        for i in range(words):
            p.add_argument(f"word{i + 1}" if words > 1 else "word")
        p.set_defaults(fn=fn)
        return p

    cmd("validate", cmd_validate, help="check the germ axioms")
    cmd("nf", cmd_nf, words=1, help="left normal form of a word")
    cmd("gcd", cmd_gcd, words=2, help="greatest common prefix of two words")
    cmd("lcm", cmd_lcm, words=2, help="least common right multiple of two words")
    cmd("divides", cmd_divides, words=2, help="whether word1 is a prefix of word2")
    cmd("deltas", cmd_deltas, help="quasi-central closure of each atom")
    cmd("classes", cmd_classes, help="atom classes and their closures")
    cmd("pure", cmd_pure, help="whether all atoms share one closure")
    cmd("decompose", cmd_decompose, left=True, help="build and verify a decomposition")
    cmd("gh", cmd_gh, words=1, left=True, help="GH-decomposition of a word")
    cmd("hg", cmd_hg, words=1, left=True, help="HG-decomposition of a word")
    p = cmd("act", cmd_act, left=True, help="apply one of the eight actions")
    p.add_argument("--op", required=True, choices=sorted(zappa_szep.WORD_ACTIONS))
    p.add_argument("--h", dest="hword", required=True, help="H-word ('.'-separated)")
    p.add_argument("--g", dest="gword", required=True, help="G-word ('.'-separated)")
    cmd("split-nf", cmd_split_nf, words=1, left=True,
        help="factor normal forms of a product normal form")
    p = cmd("merge-nf", cmd_merge_nf, left=True,
            help="product normal form from factor normal forms")
    p.add_argument("gword", help="normal form over the left factor ('|'-separated)")
    p.add_argument("hword", help="normal form over the right factor")
    p = cmd("automaton", cmd_automaton, left=True, help="export a normal-form acceptor")
    p.add_argument("--lang", default="K", choices=["K", "G", "H"])
    p.add_argument("--variant", default="proper", choices=["proper", "full"])
    p.add_argument("--format", dest="fmt", default="tsv", choices=["dot", "tsv"])
    p = cmd("count", cmd_count, left=True, help="count accepted words of a length")
    p.add_argument("--lang", default="K", choices=["K", "G", "H"])
    p.add_argument("--variant", default="proper", choices=["proper", "full"])
    p.add_argument("--n", type=int, required=True)
    p = cmd("check", cmd_check, left=True, help="run a named property suite")
    p.add_argument("--suite", required=True,
                   help="suite name, or 'all' for every applicable suite")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    return parser


def cmd_validate(args) -> int:
    try:
        g = _germ(args)
    except GermError as e:
        # show the report of an invalid germ file rather than one line
        print(str(e), file=sys.stderr)
        return 1
    report = validate_germ(g)
    print(report)
    return 0 if report.ok else 1


def cmd_nf(args) -> int:
    g = _germ(args)
    w = element.normal_form(g, parse_word(g, args.word))
    print(element.format_nf(g, w))
    return 0


def cmd_gcd(args) -> int:
    g = _germ(args)
    x = element.normal_form(g, parse_word(g, args.word1))
    y = element.normal_form(g, parse_word(g, args.word2))
    print(element.format_nf(g, element.gcd(g, x, y)))
    return 0


def cmd_lcm(args) -> int:
    g = _germ(args)
    x = element.normal_form(g, parse_word(g, args.word1))
    y = element.normal_form(g, parse_word(g, args.word2))
    print(element.format_nf(g, element.lcm(g, x, y)))
    return 0


def cmd_divides(args) -> int:
    g = _germ(args)
    x = element.normal_form(g, parse_word(g, args.word1))
    y = element.normal_form(g, parse_word(g, args.word2))
    print("true" if element.divides(g, x, y) else "false")
    return 0


def cmd_deltas(args) -> int:
    g = _germ(args)
    for a in g.atoms:
        print(f"{g.names[a]} -> {g.names[quasicenter.delta_of_simple(g, a)]}")
    return 0


def cmd_classes(args) -> int:
    g = _germ(args)
    part = quasicenter.atom_classes(g)
    for block, d in zip(part.classes, part.class_delta):
        print("{" + ",".join(g.names[a] for a in block) + "} -> " + g.names[d])
    return 0


def cmd_pure(args) -> int:
    g = _germ(args)
    part = quasicenter.atom_classes(g)
    print(f"delta-pure: {'true' if len(part) == 1 else 'false'}")
    print(f"atom-classes: {len(part)}")
    return 0


def cmd_decompose(args) -> int:
    g = _germ(args)
    zs = _zs(args, g)
    print(f"delta_G: {g.names[zs.delta_g]}")
    print(f"delta_H: {g.names[zs.delta_h]}")
    print(f"delta_G*delta_H: {g.names[g.product(zs.delta_g, zs.delta_h)]}")
    print(f"delta_K: {g.names[g.delta]}")
    part = quasicenter.atom_classes(g)
    print("classes: " + " ".join(
        "{" + ",".join(g.names[a] for a in block) + "}" for block in part.classes))
    print("left: {" + ",".join(g.names[a] for a in zs.left_atoms) + "}")
    print("right: {" + ",".join(g.names[a] for a in zs.right_atoms) + "}")
    print(f"g-simples: {len(zs.g_simples)}")
    print(f"h-simples: {len(zs.h_simples)}")
    print("check: ok")
    return 0


def cmd_gh(args) -> int:
    g = _germ(args)
    zs = _zs(args, g)
    x = element.normal_form(g, parse_word(g, args.word))
    gpart, hpart = zappa_szep.gh_decompose(zs, x)
    print(f"G: {element.format_nf(g, gpart)}")
    print(f"H: {element.format_nf(g, hpart)}")
    return 0


def cmd_hg(args) -> int:
    g = _germ(args)
    zs = _zs(args, g)
    x = element.normal_form(g, parse_word(g, args.word))
    hpart, gpart = zappa_szep.hg_decompose(zs, x)
    print(f"H: {element.format_nf(g, hpart)}")
    print(f"G: {element.format_nf(g, gpart)}")
    return 0


def cmd_act(args) -> int:
    g = _germ(args)
    zs = _zs(args, g)
    hw = tuple(parse_word(g, args.hword))
    gw = tuple(parse_word(g, args.gword))
    fn = zappa_szep.WORD_ACTIONS[args.op]
    if args.op.startswith(("rr", "rl")):
        out = fn(zs, hw, gw)
    else:
        out = fn(zs, gw, hw)
    print(format_word(g, out))
    return 0


def cmd_split_nf(args) -> int:
    g = _germ(args)
    zs = _zs(args, g)
    w = element.normal_form(g, parse_word(g, args.word))
    pair = normal_forms.split_nf(zs, w)
    print(f"G: {format_factor_nf(g, zs.delta_g, pair.nf_g)}")
    print(f"H: {format_factor_nf(g, zs.delta_h, pair.nf_h)}")
    return 0


def cmd_merge_nf(args) -> int:
    g = _germ(args)
    zs = _zs(args, g)
    pair = normal_forms.NFPair(
        normal_forms._from_letters(zs, parse_nf_letters(g, args.gword), zs.delta_g),
        normal_forms._from_letters(zs, parse_nf_letters(g, args.hword), zs.delta_h))
    print(element.format_nf(g, normal_forms.merge_nf(zs, pair)))
    return 0


def _automaton(args, g: Germ):
    if args.lang == "K":
        return automata.build_nf_automaton(g, args.variant)
    zs = _zs(args, g)
    return automata.build_factor_automaton(zs, args.lang, args.variant)


def cmd_automaton(args) -> int:
    g = _germ(args)
    sys.stdout.write(automata.export(_automaton(args, g), args.fmt))
    return 0


def cmd_count(args) -> int:
    g = _germ(args)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    print(automata.count_accepted(_automaton(args, g), args.n))
    return 0


def cmd_check(args) -> int:
    g = _germ(args)
    opt = Options(max_len=args.max_len, samples=args.samples, seed=args.seed)
    if args.suite == "all":
        names = list(GERM_SUITES) + (list(ZS_SUITES) if args.left else [])
    else:
        if args.suite not in GERM_SUITES and args.suite not in ZS_SUITES:
            raise UsageError(f"unknown suite {args.suite!r}; available: "
                             + ", ".join(sorted(GERM_SUITES) + sorted(ZS_SUITES)))
        names = [args.suite]
    target = _zs(args, g) if any(n in ZS_SUITES for n in names) else g
    bad = 0
    for name in names:
        report = suites.run_suite(name, target, opt)
        print(report)
        if not report.ok:
            bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
