"""
suites: named property suites over germs and decompositions.

Each suite exhaustively enumerates the simple-level quantifiers of one
family of structural identities (action laws, order isomorphisms,
complement formulas, normal-form criteria, ...) and samples the
word-level variants with a seeded generator.  Suites return a report with
a case count and a list of counterexample descriptions; the CLI `check`
subcommand and the test suite both run them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from . import automata, element, normal_forms, quasicenter, zappa_szep
from .element import NormalWord
from .germ import Germ
from .zappa_szep import ZSStructure


@dataclass
class SuiteReport:
    name: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        if self.ok:
            return f"suite {self.name}: ok ({self.cases} cases)"
        shown = "\n".join("  " + f for f in self.failures[:5])
        more = "" if len(self.failures) <= 5 else f"\n  ... {len(self.failures) - 5} more"
        return (f"suite {self.name}: {len(self.failures)} counterexamples "
                f"in {self.cases} cases\n{shown}{more}")


@dataclass
class Options:
    max_len: int = 4
    samples: int = 200
    seed: int = 0

    def rng(self) -> random.Random:
        return random.Random(self.seed)


class _Run:
    """Counts cases and collects formatted counterexamples."""

    def __init__(self, g: Germ):
        self.g = g
        self.cases = 0
        self.failures: list[str] = []

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(describe())

    def eq(self, lhs, rhs, label: str, *args) -> None:
        names = ", ".join(self._show(a) for a in args)
        self.check(lhs == rhs,
                   lambda: f"{label}[{names}]: {self._show(lhs)} != {self._show(rhs)}")

    def _show(self, v) -> str:
        if isinstance(v, NormalWord):
            return element.format_nf(self.g, v)
        if isinstance(v, int):
            return self.g.names[v]
        if isinstance(v, tuple):
            return ".".join(self.g.names[s] for s in v) if v else "1"
        return repr(v)


def _rand_word(rng: random.Random, alphabet: Sequence[int], max_len: int) -> tuple[int, ...]:
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def _rand_element(g: Germ, rng: random.Random, max_len: int) -> NormalWord:
    return element.normal_form(g, _rand_word(rng, range(len(g)), max_len))


def _elements_upto(g: Germ, max_len: int) -> list[NormalWord]:
    return list(element.iter_elements(g, max_len))


def _normal_words(g: Germ, alphabet: Sequence[int], budget: int) -> Iterator[tuple[int, ...]]:
    """Normal words over the alphabet with total atom length <= budget."""
    word: list[int] = []

    def grow(last: int | None, left: int) -> Iterator[tuple[int, ...]]:
        yield tuple(word)
        for s in alphabet:
            if g.atom_len[s] > left:
                continue
            if last is not None and not g.normal_pair(last, s):
                continue
            word.append(s)
            yield from grow(s, left - g.atom_len[s])
            word.pop()

    yield from grow(None, budget)


# ---------------------------------------------------------------------------
# germ-level suites
# ---------------------------------------------------------------------------

def suite_lattice_laws(g: Germ, opt: Options) -> SuiteReport:
    """Commutativity, absorption and duality of the germ lattice ops."""
    r = _Run(g)
    n = len(g)
    op = g.opposite()
    for s in range(n):
        for t in range(n):
            r.eq(g.meet(s, t), g.meet(t, s), "meet-comm", s, t)
            r.eq(g.join(s, t), g.join(t, s), "join-comm", s, t)
            r.eq(g.meet(s, g.join(s, t)), s, "absorb-meet", s, t)
            r.eq(g.join(s, g.meet(s, t)), s, "absorb-join", s, t)
            r.eq(g.product(s, g.lcomp(s, t)), g.join(s, t), "lcomp-join", s, t)
            pr = g.product(g.rcomp(s, t), s)
            r.eq(pr, g.rjoin(s, t), "rcomp-rjoin", s, t)
            r.eq(op.meet(s, t), g.rmeet(s, t), "tau-meet", s, t)
            r.eq(op.join(s, t), g.rjoin(s, t), "tau-join", s, t)
            r.eq(op.lcomp(s, t), g.rcomp(s, t), "tau-lcomp", s, t)
    for s in range(n):
        r.eq(g.rcomplement(g.complement(s)), s, "comp-inverse", s)
    if n <= 24:
        triples = [(s, t, u) for s in range(n) for t in range(n) for u in range(n)]
    else:
        rng = opt.rng()
        triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(opt.samples)]
    for s, t, u in triples:
        r.eq(g.meet(g.meet(s, t), u), g.meet(s, g.meet(t, u)), "meet-assoc", s, t, u)
        r.eq(g.join(g.join(s, t), u), g.join(s, g.join(t, u)), "join-assoc", s, t, u)
    return SuiteReport("lattice-laws", r.cases, r.failures)


def suite_complements_lemma(g: Germ, opt: Options) -> SuiteReport:
    """The two complement recursions, on simples and on random elements."""
    r = _Run(g)
    for a in range(len(g)):
        for b, ab in g.product_rows[a].items():
            for c in range(len(g)):
                r.eq(g.lcomp(ab, c), g.lcomp(b, g.lcomp(a, c)), "under-product", a, b, c)
                rhs = g.product(g.lcomp(c, a), g.lcomp(g.lcomp(a, c), b))
                r.eq(g.lcomp(c, ab), rhs, "over-product", a, b, c)
    rng = opt.rng()
    for _ in range(opt.samples):
        x = _rand_element(g, rng, opt.max_len)
        y = _rand_element(g, rng, opt.max_len)
        z = _rand_element(g, rng, opt.max_len)
        xy = element.multiply(g, x, y)
        r.eq(element.left_complement(g, xy, z),
             element.left_complement(g, y, element.left_complement(g, x, z)),
             "element-under", x, y, z)
        r.eq(element.left_complement(g, z, xy),
             element.multiply(g, element.left_complement(g, z, x),
                              element.left_complement(
                                  g, element.left_complement(g, x, z), y)),
             "element-over", x, y, z)
    return SuiteReport("complements-lemma", r.cases, r.failures)


def suite_normal_form_confluence(g: Germ, opt: Options) -> SuiteReport:
    """Rewriting adjacent pairs in any order reaches the same normal form."""
    r = _Run(g)
    rng = opt.rng()

    def random_order_nf(word: tuple[int, ...]) -> NormalWord:
        w = list(word)
        while True:
            bad = [i for i in range(len(w) - 1)
                   if g.meet(g.complement(w[i]), w[i + 1]) != g.unit]
            if not bad:
                break
            i = rng.choice(bad)
            u = g.meet(g.complement(w[i]), w[i + 1])
            w[i], w[i + 1] = g.product(w[i], u), g.lcomp(u, w[i + 1])
        lo = 0
        hi = len(w)
        while lo < hi and w[lo] == g.delta:
            lo += 1
        while lo < hi and w[hi - 1] == g.unit:
            hi -= 1
        return NormalWord(lo, tuple(w[lo:hi]))

    for _ in range(opt.samples):
        word = _rand_word(rng, range(len(g)), max(opt.max_len, 6))
        nf = element.normal_form(g, word)
        r.eq(random_order_nf(word), nf, "confluence", word)
        r.eq(element.normal_form(g, element.letters(g, nf)), nf, "idempotence", word)
    return SuiteReport("normal-form-confluence", r.cases, r.failures)


def suite_element_lattice_laws(g: Germ, opt: Options) -> SuiteReport:
    """gcd/lcm laws at element level, plus suffix-order sanity."""
    r = _Run(g)
    rng = opt.rng()
    unit = element.UNIT
    for _ in range(opt.samples):
        x = _rand_element(g, rng, opt.max_len)
        y = _rand_element(g, rng, opt.max_len)
        z = _rand_element(g, rng, opt.max_len)
        r.eq(element.gcd(g, x, y), element.gcd(g, y, x), "gcd-comm", x, y)
        r.eq(element.lcm(g, x, y), element.lcm(g, y, x), "lcm-comm", x, y)
        r.check(element.divides(g, element.gcd(g, x, y), x),
                lambda: f"gcd does not divide: {r._show(x)}, {r._show(y)}")
        r.check(element.divides(g, x, element.lcm(g, x, y)),
                lambda: f"lcm not a multiple: {r._show(x)}, {r._show(y)}")
        r.eq(element.gcd(g, x, element.lcm(g, x, y)), x, "gcd-absorb", x, y)
        r.eq(element.lcm(g, x, element.gcd(g, x, y)), x, "lcm-absorb", x, y)
        r.eq(element.gcd(g, element.gcd(g, x, y), z),
             element.gcd(g, x, element.gcd(g, y, z)), "gcd-assoc", x, y, z)
        r.eq(element.gcd(g, x, unit), unit, "gcd-unit", x)
        r.eq(element.left_complement(g, x, x), unit, "self-complement", x)
        r.check(element.rdivides(g, x, element.rlcm(g, x, y)),
                lambda: f"rlcm not a right multiple: {r._show(x)}, {r._show(y)}")
        r.eq(element.rgcd(g, x, unit), unit, "rgcd-unit", x)
        xy = element.multiply(g, x, y)
        r.eq(element.atom_length(g, xy),
             element.atom_length(g, x) + element.atom_length(g, y),
             "length-additive", x, y)
    return SuiteReport("element-lattice-laws", r.cases, r.failures)


def suite_quasicenter(g: Germ, opt: Options) -> SuiteReport:
    """Quasi-central closure properties over all simples."""
    r = _Run(g)
    n = len(g)
    delta_of = quasicenter._delta_table(g)
    for a in g.atoms:
        r.check(g.left_divides(a, delta_of[a]),
                lambda a=a: f"{g.names[a]} does not divide its closure")
        r.check(g.left_divides(delta_of[a], g.delta),
                lambda a=a: f"closure of {g.names[a]} is not simple-bounded")
    for s in range(n):
        for t in range(n):
            r.eq(delta_of[g.join(s, t)], g.join(delta_of[s], delta_of[t]),
                 "join-compatible", s, t)
    if g.atoms:
        for c in quasicenter.atom_classes(g).class_delta:
            for s in range(n):
                r.check(g.left_divides(s, c) == g.right_divides(s, c),
                        lambda s=s, c=c: f"{g.names[c]} prefix/suffix sets differ "
                                         f"at {g.names[s]}")
    rng = opt.rng()
    for a in g.atoms:
        for _ in range(3):
            order = list(g.atoms)
            rng.shuffle(order)
            r.eq(quasicenter._compute_delta(g, a, tuple(order)), delta_of[a],
                 "order-independent", a)
    return SuiteReport("quasicenter", r.cases, r.failures)


GERM_SUITES: dict[str, Callable[[Germ, Options], SuiteReport]] = {
    "lattice-laws": suite_lattice_laws,
    "complements-lemma": suite_complements_lemma,
    "normal-form-confluence": suite_normal_form_confluence,
    "element-lattice-laws": suite_element_lattice_laws,
    "quasicenter": suite_quasicenter,
}


# ---------------------------------------------------------------------------
# decomposition-level suites
# ---------------------------------------------------------------------------

def _gh_range(zs: ZSStructure):
    return zs.g_simples, zs.h_simples


def suite_action_laws(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Associativity and product rules of the four actions, plus word forms."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for h1 in H:
        for h2 in H:
            k = g.product(h1, h2)
            if k is None or not zs.member_h(k):
                continue
            for gs in G:
                r.eq(zs.act_rr(k, gs), zs.act_rr(h1, zs.act_rr(h2, gs)),
                     "rr-assoc", h1, h2, gs)
            for gs in G:
                r.eq(zs.act_rl(k, gs),
                     g.product(zs.act_rl(h1, zs.act_rr(h2, gs)), zs.act_rl(h2, gs)),
                     "rl-product", h1, h2, gs)
    for g1 in G:
        for g2 in G:
            k = g.product(g1, g2)
            if k is None or not zs.member_g(k):
                continue
            for hs in H:
                r.eq(zs.act_lr(k, hs), zs.act_lr(g1, zs.act_lr(g2, hs)),
                     "lr-assoc", g1, g2, hs)
                r.eq(zs.act_rl(hs, k),
                     zs.act_rl(zs.act_rl(hs, g1), g2), "rl-assoc", hs, g1, g2)
                r.eq(zs.act_rr(hs, k),
                     g.product(zs.act_rr(hs, g1), zs.act_rr(zs.act_rl(hs, g1), g2)),
                     "rr-product", hs, g1, g2)
                r.eq(zs.act_ll(k, hs),
                     g.product(zs.act_ll(g1, zs.act_lr(g2, hs)), zs.act_ll(g2, hs)),
                     "ll-product", g1, g2, hs)
    for h1 in H:
        for h2 in H:
            k = g.product(h1, h2)
            if k is None or not zs.member_h(k):
                continue
            for gs in G:
                r.eq(zs.act_ll(gs, k),
                     zs.act_ll(zs.act_ll(gs, h1), h2), "ll-assoc", gs, h1, h2)
                r.eq(zs.act_lr(gs, k),
                     g.product(zs.act_lr(gs, h1), zs.act_lr(zs.act_ll(gs, h1), h2)),
                     "lr-product", gs, h1, h2)
    rng = opt.rng()
    for _ in range(opt.samples):
        hw = _rand_word(rng, H, opt.max_len)
        hw2 = _rand_word(rng, H, opt.max_len)
        gw = _rand_word(rng, G, opt.max_len)
        gw2 = _rand_word(rng, G, opt.max_len)
        r.eq(zappa_szep.act_rr_word(zs, hw + hw2, gw),
             zappa_szep.act_rr_word(zs, hw, zappa_szep.act_rr_word(zs, hw2, gw)),
             "rr-word-assoc", hw, hw2, gw)
        r.eq(zappa_szep.act_lr_word(zs, gw + gw2, hw),
             zappa_szep.act_lr_word(zs, gw, zappa_szep.act_lr_word(zs, gw2, hw)),
             "lr-word-assoc", gw, gw2, hw)
        # the defining equation at word level: h.g = (h |> g)(h <| g)
        he = element.normal_form(g, hw)
        ge = element.normal_form(g, gw)
        r.eq(element.multiply(g, he, ge),
             element.multiply(
                 g,
                 element.normal_form(g, zappa_szep.act_rr_word(zs, hw, gw)),
                 element.normal_form(g, zappa_szep.act_rl_word(zs, hw, gw))),
             "word-defining-rr", hw, gw)
        r.eq(element.multiply(g, ge, he),
             element.multiply(
                 g,
                 element.normal_form(g, zappa_szep.act_lr_word(zs, gw, hw)),
                 element.normal_form(g, zappa_szep.act_ll_word(zs, gw, hw))),
             "word-defining-lr", gw, hw)
    return SuiteReport("action-laws", r.cases, r.failures)


def suite_identity_detection(zs: ZSStructure, opt: Options) -> SuiteReport:
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    u = g.unit
    for hs in H:
        for gs in G:
            r.check((gs == u) == (zs.act_rr(hs, gs) == u),
                    lambda hs=hs, gs=gs: f"rr unit detection fails at ({g.names[hs]}, {g.names[gs]})")
            r.check((hs == u) == (zs.act_rl(hs, gs) == u),
                    lambda hs=hs, gs=gs: f"rl unit detection fails at ({g.names[hs]}, {g.names[gs]})")
            r.check((hs == u) == (zs.act_lr(gs, hs) == u),
                    lambda hs=hs, gs=gs: f"lr unit detection fails at ({g.names[gs]}, {g.names[hs]})")
            r.check((gs == u) == (zs.act_ll(gs, hs) == u),
                    lambda hs=hs, gs=gs: f"ll unit detection fails at ({g.names[gs]}, {g.names[hs]})")
    return SuiteReport("identity-detection", r.cases, r.failures)


def suite_round_trip(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Rewriting GH to HG and back is the identity."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for gs in G:
        for hs in H:
            h2 = zs.act_lr(gs, hs)
            g2 = zs.act_ll(gs, hs)
            r.eq(zs.act_rr(h2, g2), gs, "gh-hg-gh-g", gs, hs)
            r.eq(zs.act_rl(h2, g2), hs, "gh-hg-gh-h", gs, hs)
            g3 = zs.act_rr(hs, gs)
            h3 = zs.act_rl(hs, gs)
            r.eq(zs.act_lr(g3, h3), hs, "hg-gh-hg-h", hs, gs)
            r.eq(zs.act_ll(g3, h3), gs, "hg-gh-hg-g", hs, gs)
    return SuiteReport("round-trip", r.cases, r.failures)


def suite_inverse_interplay(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Identities mixing the actions with their inverse permutations."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for gs in G:
        for hs in H:
            r.eq(zs.act_rl(hs, zs.act_rr_inv(hs, gs)), zs.act_lr_inv(gs, hs),
                 "inv-mix-1", hs, gs)
            r.eq(zs.act_rr(zs.act_rl_inv(hs, gs), gs), zs.act_ll_inv(gs, hs),
                 "inv-mix-2", hs, gs)
            r.eq(zs.act_ll(gs, zs.act_lr_inv(gs, hs)), zs.act_rr_inv(hs, gs),
                 "inv-mix-3", gs, hs)
            r.eq(zs.act_lr(zs.act_ll_inv(gs, hs), hs), zs.act_rl_inv(hs, gs),
                 "inv-mix-4", gs, hs)
    for h1 in H:
        for h2 in H:
            k = g.product(h1, h2)
            if k is None or not zs.member_h(k):
                continue
            for gs in G:
                r.eq(zs.act_rr_inv(k, gs),
                     zs.act_rr_inv(h2, zs.act_rr_inv(h1, gs)), "inv-rr-assoc", h1, h2, gs)
                r.eq(zs.act_ll_inv(gs, k),
                     zs.act_ll_inv(zs.act_ll_inv(gs, h2), h1), "inv-ll-assoc", gs, h1, h2)
    for g1 in G:
        for g2 in G:
            k = g.product(g1, g2)
            if k is None or not zs.member_g(k):
                continue
            for hs in H:
                r.eq(zs.act_lr_inv(k, hs),
                     zs.act_lr_inv(g2, zs.act_lr_inv(g1, hs)), "inv-lr-assoc", g1, g2, hs)
                r.eq(zs.act_rl_inv(hs, k),
                     zs.act_rl_inv(zs.act_rl_inv(hs, g2), g1), "inv-rl-assoc", hs, g1, g2)
                r.eq(zs.act_rr_inv(hs, k),
                     g.product(zs.act_rr_inv(hs, g1),
                               zs.act_rr_inv(zs.act_lr_inv(g1, hs), g2)),
                     "inv-rr-product", hs, g1, g2)
                r.eq(zs.act_ll_inv(k, hs),
                     g.product(zs.act_ll_inv(g1, zs.act_rl_inv(hs, g2)),
                               zs.act_ll_inv(g2, hs)),
                     "inv-ll-product", g1, g2, hs)
    for h1 in H:
        for h2 in H:
            k = g.product(h1, h2)
            if k is None or not zs.member_h(k):
                continue
            for gs in G:
                r.eq(zs.act_lr_inv(gs, k),
                     g.product(zs.act_lr_inv(gs, h1),
                               zs.act_lr_inv(zs.act_rr_inv(h1, gs), h2)),
                     "inv-lr-product", gs, h1, h2)
                r.eq(zs.act_rl_inv(k, gs),
                     g.product(zs.act_rl_inv(h1, zs.act_ll_inv(gs, h2)),
                               zs.act_rl_inv(h2, gs)),
                     "inv-rl-product", h1, h2, gs)
    rng = opt.rng()
    for _ in range(opt.samples):
        hw = _rand_word(rng, H, opt.max_len)
        gw = _rand_word(rng, G, opt.max_len)
        r.eq(zappa_szep.act_rr_inv_word(zs, hw, zappa_szep.act_rr_word(zs, hw, gw)),
             gw, "word-rr-roundtrip", hw, gw)
        r.eq(zappa_szep.act_rl_inv_word(zs, zappa_szep.act_rl_word(zs, hw, gw), gw),
             hw, "word-rl-roundtrip", hw, gw)
        r.eq(zappa_szep.act_lr_inv_word(zs, gw, zappa_szep.act_lr_word(zs, gw, hw)),
             hw, "word-lr-roundtrip", gw, hw)
        r.eq(zappa_szep.act_ll_inv_word(zs, zappa_szep.act_ll_word(zs, gw, hw), hw),
             gw, "word-ll-roundtrip", gw, hw)
    return SuiteReport("inverse-interplay", r.cases, r.failures)


def suite_order_isomorphism(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Left actions preserve prefix order; right actions preserve suffix order."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for hs in H:
        for g1 in G:
            for g2 in G:
                r.check(g.left_divides(g1, g2)
                        == g.left_divides(zs.act_rr(hs, g1), zs.act_rr(hs, g2)),
                        lambda hs=hs, g1=g1, g2=g2:
                        f"rr not a prefix iso at ({g.names[hs]}; {g.names[g1]}, {g.names[g2]})")
                r.check(g.right_divides(g1, g2)
                        == g.right_divides(zs.act_ll(g1, hs), zs.act_ll(g2, hs)),
                        lambda hs=hs, g1=g1, g2=g2:
                        f"ll not a suffix iso at ({g.names[hs]}; {g.names[g1]}, {g.names[g2]})")
    for gs in G:
        for h1 in H:
            for h2 in H:
                r.check(g.left_divides(h1, h2)
                        == g.left_divides(zs.act_lr(gs, h1), zs.act_lr(gs, h2)),
                        lambda gs=gs, h1=h1, h2=h2:
                        f"lr not a prefix iso at ({g.names[gs]}; {g.names[h1]}, {g.names[h2]})")
                r.check(g.right_divides(h1, h2)
                        == g.right_divides(zs.act_rl(h1, gs), zs.act_rl(h2, gs)),
                        lambda gs=gs, h1=h1, h2=h2:
                        f"rl not a suffix iso at ({g.names[gs]}; {g.names[h1]}, {g.names[h2]})")
    return SuiteReport("order-isomorphism", r.cases, r.failures)


def suite_complement_transport(zs: ZSStructure, opt: Options) -> SuiteReport:
    """How the actions move lattice complements between factors."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for hs in H:
        for g1 in G:
            for g2 in G:
                r.eq(zs.act_rr(hs, g.lcomp(g1, g2)),
                     g.lcomp(zs.act_ll_inv(g1, hs),
                             zs.act_rr(zs.act_rl_inv(hs, g1), g2)),
                     "transport-fwd", hs, g1, g2)
                r.eq(zs.act_rr_inv(hs, g.lcomp(g1, g2)),
                     g.lcomp(zs.act_ll(g1, hs),
                             zs.act_rr_inv(zs.act_lr(g1, hs), g2)),
                     "transport-inv", hs, g1, g2)
    return SuiteReport("complement-transport", r.cases, r.failures)


def suite_lcm_formula(zs: ZSStructure, opt: Options) -> SuiteReport:
    """lcm(g, h) = g.(g^-1 |>> h) = h.(h^-1 |> g), injectively."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    seen: dict[int, tuple[int, int]] = {}
    for gs in G:
        for hs in H:
            j = g.join(gs, hs)
            r.eq(g.product(gs, zs.act_lr_inv(gs, hs)), j, "lcm-gh", gs, hs)
            r.eq(g.product(hs, zs.act_rr_inv(hs, gs)), j, "lcm-hg", gs, hs)
            r.eq(g.rjoin(zs.act_rr_inv(hs, gs), zs.act_lr_inv(gs, hs)), j,
                 "lcm-suffix", gs, hs)
            r.check(seen.setdefault(j, (gs, hs)) == (gs, hs),
                    lambda gs=gs, hs=hs, j=j:
                    f"join {g.names[j]} reached from both {seen[j]} and "
                    f"({g.names[gs]}, {g.names[hs]})")
    r.check(len(seen) == len(G) * len(H),
            lambda: "(g, h) -> join(g, h) is not injective")
    return SuiteReport("lcm-formula", r.cases, r.failures)


def suite_poset_product(zs: ZSStructure, opt: Options) -> SuiteReport:
    """(g, h) -> join(g, h) is an isomorphism of the product order."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for g1 in G:
        for h1 in H:
            j1 = g.join(g1, h1)
            for g2 in G:
                for h2 in H:
                    lhs = g.left_divides(g1, g2) and g.left_divides(h1, h2)
                    rhs = g.left_divides(j1, g.join(g2, h2))
                    r.check(lhs == rhs,
                            lambda g1=g1, h1=h1, g2=g2, h2=h2:
                            "poset product fails at "
                            f"({g.names[g1]},{g.names[h1]}) vs ({g.names[g2]},{g.names[h2]})")
    return SuiteReport("poset-product", r.cases, r.failures)


def suite_join_complement(zs: ZSStructure, opt: Options) -> SuiteReport:
    """The complement of one join under another, factor by factor."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for g1 in G:
        for h1 in H:
            x = zs.act_lr_inv(g1, h1)
            y = zs.act_rr_inv(h1, g1)
            j1 = g.join(g1, h1)
            for g2 in G:
                for h2 in H:
                    r.eq(g.lcomp(j1, g.join(g2, h2)),
                         g.join(zs.act_rr_inv(x, g.lcomp(g1, g2)),
                                zs.act_lr_inv(y, g.lcomp(h1, h2))),
                         "join-under", g1, h1, g2, h2)
    return SuiteReport("join-complement", r.cases, r.failures)


def suite_delta_invariance(zs: ZSStructure, opt: Options) -> SuiteReport:
    """The factor Garside elements are fixed and simples map to simples."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for hs in H:
        r.eq(zs.act_rr(hs, zs.delta_g), zs.delta_g, "rr-fixes-deltaG", hs)
        r.eq(zs.act_ll(zs.delta_g, hs), zs.delta_g, "ll-fixes-deltaG", hs)
    for gs in G:
        r.eq(zs.act_rl(zs.delta_h, gs), zs.delta_h, "rl-fixes-deltaH", gs)
        r.eq(zs.act_lr(gs, zs.delta_h), zs.delta_h, "lr-fixes-deltaH", gs)
    for hs in H:
        for gs in G:
            r.check(zs.member_g(zs.act_rr(hs, gs)) and zs.member_g(zs.act_rr_inv(hs, gs))
                    and zs.member_g(zs.act_ll(gs, hs)) and zs.member_g(zs.act_ll_inv(gs, hs)),
                    lambda hs=hs, gs=gs: f"G-simples not preserved at ({g.names[hs]}, {g.names[gs]})")
            r.check(zs.member_h(zs.act_rl(hs, gs)) and zs.member_h(zs.act_rl_inv(hs, gs))
                    and zs.member_h(zs.act_lr(gs, hs)) and zs.member_h(zs.act_lr_inv(gs, hs)),
                    lambda hs=hs, gs=gs: f"H-simples not preserved at ({g.names[hs]}, {g.names[gs]})")
    return SuiteReport("delta-invariance", r.cases, r.failures)


def suite_complement_action(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Factor complements of acted simples."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for hs in H:
        for gs in G:
            r.eq(zs.comp_g(zs.act_rr(hs, gs)),
                 zs.act_rr(zs.act_rl(hs, gs), zs.comp_g(gs)), "compG-rr", hs, gs)
            r.eq(zs.comp_g(zs.act_ll(gs, hs)),
                 zs.act_rr_inv(hs, zs.comp_g(gs)), "compG-ll", gs, hs)
            r.eq(zs.comp_h(zs.act_lr(gs, hs)),
                 zs.act_lr(zs.act_ll(gs, hs), zs.comp_h(hs)), "compH-lr", gs, hs)
            r.eq(zs.comp_h(zs.act_rl(hs, gs)),
                 zs.act_lr_inv(gs, zs.comp_h(hs)), "compH-rl", hs, gs)
    return SuiteReport("complement-action", r.cases, r.failures)


def suite_complement_of_join(zs: ZSStructure, opt: Options) -> SuiteReport:
    """The ambient complement of a join from the factor complements."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    for gs in G:
        for hs in H:
            r.eq(g.complement(g.join(gs, hs)),
                 g.join(zs.comp_g(zs.act_rr_inv(hs, gs)),
                        zs.comp_h(zs.act_lr_inv(gs, hs))),
                 "comp-of-join", gs, hs)
    return SuiteReport("complement-of-join", r.cases, r.failures)


def suite_factor_closure(zs: ZSStructure, opt: Options) -> SuiteReport:
    """A product landing in a factor forces both terms into that factor."""
    g = zs.germ
    r = _Run(g)
    elems = _elements_upto(g, opt.max_len)
    for x in elems:
        for y in elems:
            xy = element.multiply(g, x, y)
            if zappa_szep.element_in_g(zs, xy):
                r.check(zappa_szep.element_in_g(zs, x) and zappa_szep.element_in_g(zs, y),
                        lambda x=x, y=y: f"G-closure fails at {r._show(x)}, {r._show(y)}")
            if zappa_szep.element_in_h(zs, xy):
                r.check(zappa_szep.element_in_h(zs, x) and zappa_szep.element_in_h(zs, y),
                        lambda x=x, y=y: f"H-closure fails at {r._show(x)}, {r._show(y)}")
    return SuiteReport("factor-closure", r.cases, r.failures)


def suite_atoms_to_atoms(zs: ZSStructure, opt: Options) -> SuiteReport:
    g = zs.germ
    r = _Run(g)
    for hs in zs.h_simples:
        for a in zs.left_atoms:
            r.check(g.is_atom(zs.act_rr(hs, a)),
                    lambda hs=hs, a=a: f"{g.names[hs]} |> {g.names[a]} is not an atom")
    for gs in zs.g_simples:
        for b in zs.right_atoms:
            r.check(g.is_atom(zs.act_lr(gs, b)),
                    lambda gs=gs, b=b: f"{g.names[gs]} |>> {g.names[b]} is not an atom")
    return SuiteReport("atoms-to-atoms", r.cases, r.failures)


def suite_decomposition_uniqueness(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Every element has exactly one GH- and one HG-factorisation."""
    g = zs.germ
    r = _Run(g)
    elems = _elements_upto(g, opt.max_len)
    g_elems = [x for x in elems if zappa_szep.element_in_g(zs, x)]
    h_elems = [x for x in elems if zappa_szep.element_in_h(zs, x)]
    gh_count: dict[NormalWord, int] = {}
    hg_count: dict[NormalWord, int] = {}
    for ge in g_elems:
        for he in h_elems:
            k = element.multiply(g, ge, he)
            if element.atom_length(g, k) <= opt.max_len:
                gh_count[k] = gh_count.get(k, 0) + 1
            k2 = element.multiply(g, he, ge)
            if element.atom_length(g, k2) <= opt.max_len:
                hg_count[k2] = hg_count.get(k2, 0) + 1
    for x in elems:
        r.check(gh_count.get(x, 0) == 1,
                lambda x=x: f"{r._show(x)} has {gh_count.get(x, 0)} GH-factorisations")
        r.check(hg_count.get(x, 0) == 1,
                lambda x=x: f"{r._show(x)} has {hg_count.get(x, 0)} HG-factorisations")
        gpart, hpart = zappa_szep.gh_decompose(zs, x)
        r.eq(element.multiply(g, gpart, hpart), x, "gh-recompose", x)
        hpart2, gpart2 = zappa_szep.hg_decompose(zs, x)
        r.eq(element.multiply(g, hpart2, gpart2), x, "hg-recompose", x)
    return SuiteReport("decomposition-uniqueness", r.cases, r.failures)


def suite_local_deltas(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Quasi-central closures of factor simples stay in the factor."""
    g = zs.germ
    r = _Run(g)
    for gs in zs.g_simples:
        r.check(zs.member_g(quasicenter.delta_of_simple(g, gs)),
                lambda gs=gs: f"closure of {g.names[gs]} leaves G")
    for hs in zs.h_simples:
        r.check(zs.member_h(quasicenter.delta_of_simple(g, hs)),
                lambda hs=hs: f"closure of {g.names[hs]} leaves H")
    return SuiteReport("local-deltas", r.cases, r.failures)


def suite_normal_form_criteria(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Factor-level normality criteria against the ambient definition."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    u = g.unit
    for g1 in G:
        for h1 in H:
            for g2 in G:
                for h2 in H:
                    lhs = (g.meet(g.complement(g.join(g1, h1)), g.join(g2, h2)) == u)
                    rhs = (g.meet(zs.comp_g(zs.act_rr_inv(h1, g1)), g2) == u
                           and g.meet(zs.comp_h(zs.act_lr_inv(g1, h1)), h2) == u)
                    r.check(lhs == rhs,
                            lambda g1=g1, h1=h1, g2=g2, h2=h2:
                            f"join criterion fails at ({g.names[g1]},{g.names[h1]},"
                            f"{g.names[g2]},{g.names[h2]})")

                    def oracle(k1: int, k2: int) -> bool:
                        return g.normal_pair(k1, k2) and k2 != u

                    r.check(normal_forms.is_normal_gh_gh(zs, g1, h1, g2, h2)
                            == oracle(g.product(g1, h1), g.product(g2, h2)),
                            lambda g1=g1, h1=h1, g2=g2, h2=h2:
                            f"gh|gh criterion fails at ({g.names[g1]},{g.names[h1]},"
                            f"{g.names[g2]},{g.names[h2]})")
                    r.check(normal_forms.is_normal_gh_hg(zs, g1, h1, h2, g2)
                            == oracle(g.product(g1, h1), g.product(h2, g2)),
                            lambda g1=g1, h1=h1, g2=g2, h2=h2:
                            f"gh|hg criterion fails at ({g.names[g1]},{g.names[h1]},"
                            f"{g.names[h2]},{g.names[g2]})")
                    r.check(normal_forms.is_normal_hg_gh(zs, h1, g1, g2, h2)
                            == oracle(g.product(h1, g1), g.product(g2, h2)),
                            lambda g1=g1, h1=h1, g2=g2, h2=h2:
                            f"hg|gh criterion fails at ({g.names[h1]},{g.names[g1]},"
                            f"{g.names[g2]},{g.names[h2]})")
                    r.check(normal_forms.is_normal_hg_hg(zs, h1, g1, h2, g2)
                            == oracle(g.product(h1, g1), g.product(h2, g2)),
                            lambda g1=g1, h1=h1, g2=g2, h2=h2:
                            f"hg|hg criterion fails at ({g.names[h1]},{g.names[g1]},"
                            f"{g.names[h2]},{g.names[g2]})")
    return SuiteReport("normal-form-criteria", r.cases, r.failures)


def suite_push_lemma(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Pushing an H-simple through a normal word of GH-factors."""
    g = zs.germ
    r = _Run(g)
    G, H = _gh_range(zs)
    u = g.unit

    def check_config(h: int, pairs: list[tuple[int, int]]) -> None:
        ks = [g.product(gs, hs) for gs, hs in pairs]
        if any(k is None or k == u for k in ks):
            return
        if not all(g.normal_pair(ks[i], ks[i + 1]) for i in range(len(ks) - 1)):
            return
        if g.meet(zs.comp_h(h), zs.act_lr(pairs[0][0], pairs[0][1])) != u:
            return
        out = [g.product(h, pairs[0][0])]
        for i in range(len(pairs) - 1):
            out.append(g.product(pairs[i][1], pairs[i + 1][0]))
        if pairs[-1][1] != u:
            out.append(pairs[-1][1])
        ok = (all(k is not None and k != u for k in out)
              and all(g.normal_pair(out[i], out[i + 1]) for i in range(len(out) - 1)))
        r.check(ok, lambda: "push lemma fails at h="
                f"{g.names[h]}, word {[tuple(g.names[x] for x in p) for p in pairs]}")

    for h in H:
        for g1 in G:
            for h1 in H:
                check_config(h, [(g1, h1)])
                for g2 in G:
                    for h2 in H:
                        check_config(h, [(g1, h1), (g2, h2)])
    rng = opt.rng()
    for _ in range(opt.samples):
        length = rng.randint(3, max(3, opt.max_len))
        h = rng.choice(H)
        pairs = [(rng.choice(G), rng.choice(H)) for _ in range(length)]
        check_config(h, pairs)
    return SuiteReport("push-lemma", r.cases, r.failures)


def suite_action_preserves_nf(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Acting on a normal factor word gives a normal word, both ways."""
    g = zs.germ
    r = _Run(g)
    g_alpha = tuple(s for s in zs.g_simples if s != g.unit)
    h_alpha = tuple(s for s in zs.h_simples if s != g.unit)

    def norm(word: tuple[int, ...]) -> bool:
        return all(g.normal_pair(word[i], word[i + 1]) for i in range(len(word) - 1))

    def words(alpha, letters: int) -> Iterator[tuple[int, ...]]:
        def grow(word: list[int]) -> Iterator[tuple[int, ...]]:
            yield tuple(word)
            if len(word) == letters:
                return
            for s in alpha:
                if not word or g.normal_pair(word[-1], s):
                    word.append(s)
                    yield from grow(word)
                    word.pop()
        yield from grow([])

    for gw in words(g_alpha, opt.max_len):
        for hs in zs.h_simples:
            acted = zappa_szep.act_rr_word(zs, (hs,), gw)
            r.check(norm(acted), lambda hs=hs, gw=gw:
                    f"{g.names[hs]} |> {r._show(gw)} is not normal")
            back = zappa_szep.act_rr_inv_word(zs, (hs,), gw)
            r.check(norm(back), lambda hs=hs, gw=gw:
                    f"{g.names[hs]}^-1 |> {r._show(gw)} is not normal")
    for hw in words(h_alpha, opt.max_len):
        for gs in zs.g_simples:
            acted = zappa_szep.act_lr_word(zs, (gs,), hw)
            r.check(norm(acted), lambda gs=gs, hw=hw:
                    f"{g.names[gs]} |>> {r._show(hw)} is not normal")
            back = zappa_szep.act_lr_inv_word(zs, (gs,), hw)
            r.check(norm(back), lambda gs=gs, hw=hw:
                    f"{g.names[gs]}^-1 |>> {r._show(hw)} is not normal")
    return SuiteReport("action-preserves-nf", r.cases, r.failures)


def suite_translation_roundtrip(zs: ZSStructure, opt: Options) -> SuiteReport:
    """split/merge and the bijections against the element-level oracles."""
    g = zs.germ
    r = _Run(g)
    full = tuple(s for s in range(len(g)) if s != g.unit)
    g_alpha = tuple(s for s in zs.g_simples if s != g.unit)
    h_alpha = tuple(s for s in zs.h_simples if s != g.unit)

    k_words = list(_normal_words(g, full, opt.max_len))
    images = set()
    for letters in k_words:
        w = normal_forms._from_letters(zs, list(letters), g.delta)
        p = normal_forms.split_nf(zs, w)
        r.eq(normal_forms.merge_nf(zs, p), w, "merge-after-split", w)
        gpart, hpart = zappa_szep.gh_decompose(zs, w)
        r.eq(element.normal_form(g, normal_forms._g_letters(zs, p.nf_g)), gpart,
             "split-g-oracle", w)
        r.eq(element.normal_form(g, normal_forms._h_letters(zs, p.nf_h)), hpart,
             "split-h-oracle", w)

    pair_count = 0
    by_length: dict[int, int] = {}
    for gl in _normal_words(g, g_alpha, opt.max_len):
        glen = sum(g.atom_len[s] for s in gl)
        for hl in _normal_words(g, h_alpha, opt.max_len - glen):
            pair_count += 1
            p = normal_forms.NFPair(
                normal_forms._from_letters(zs, list(gl), zs.delta_g),
                normal_forms._from_letters(zs, list(hl), zs.delta_h))
            w = normal_forms.phi(zs, p)
            r.eq(normal_forms.phi_inv(zs, w), p, "split-after-merge", w)
            r.eq(w, element.normal_form(g, gl + hl), "merge-oracle", gl, hl)
            images.add(w)
            total = glen + sum(g.atom_len[s] for s in hl)
            by_length[total] = by_length.get(total, 0) + 1
            ge = element.normal_form(g, gl)
            he = element.normal_form(g, hl)
            r.eq(normal_forms.psi(zs, p), element.lcm(g, ge, he), "psi-oracle", gl, hl)
    r.check(len(images) == pair_count,
            lambda: f"phi is not injective: {pair_count} pairs, {len(images)} images")
    k_by_length: dict[int, int] = {}
    for letters in k_words:
        total = sum(g.atom_len[s] for s in letters)
        k_by_length[total] = k_by_length.get(total, 0) + 1
    r.eq(by_length, k_by_length, "phi-counts")
    return SuiteReport("translation-roundtrip", r.cases, r.failures)


def suite_automata_translation(zs: ZSStructure, opt: Options) -> SuiteReport:
    """Translated product acceptor vs the directly built one."""
    g = zs.germ
    r = _Run(g)
    a_g = automata.build_factor_automaton(zs, "G", "full")
    a_h = automata.build_factor_automaton(zs, "H", "full")
    translated = automata.translate_pair_to_product(zs, a_g, a_h)
    direct = automata.build_nf_automaton(g, "full")
    max_n = min(opt.max_len + 2, 6)
    for n in range(max_n + 1):
        lhs = set(automata.enumerate_accepted(translated, n))
        rhs = set(automata.enumerate_accepted(direct, n))
        r.check(lhs == rhs,
                lambda n=n, lhs=lhs, rhs=rhs:
                f"languages differ at length {n}: {len(lhs)} vs {len(rhs)} words")
    back_g, back_h = automata.project_product_to_pair(zs, translated)
    r.eq(back_g, a_g, "project-G")
    r.eq(back_h, a_h, "project-H")
    return SuiteReport("automata-translation", r.cases, r.failures)


ZS_SUITES: dict[str, Callable[[ZSStructure, Options], SuiteReport]] = {
    "action-laws": suite_action_laws,
    "identity-detection": suite_identity_detection,
    "round-trip": suite_round_trip,
    "inverse-interplay": suite_inverse_interplay,
    "order-isomorphism": suite_order_isomorphism,
    "complement-transport": suite_complement_transport,
    "lcm-formula": suite_lcm_formula,
    "poset-product": suite_poset_product,
    "join-complement": suite_join_complement,
    "delta-invariance": suite_delta_invariance,
    "complement-action": suite_complement_action,
    "complement-of-join": suite_complement_of_join,
    "factor-closure": suite_factor_closure,
    "atoms-to-atoms": suite_atoms_to_atoms,
    "decomposition-uniqueness": suite_decomposition_uniqueness,
    "local-deltas": suite_local_deltas,
    "normal-form-criteria": suite_normal_form_criteria,
    "push-lemma": suite_push_lemma,
    "action-preserves-nf": suite_action_preserves_nf,
    "translation-roundtrip": suite_translation_roundtrip,
    "automata-translation": suite_automata_translation,
}


def run_suite(name: str, target: Germ | ZSStructure, opt: Options | None = None) -> SuiteReport:
    """Run one named suite against a germ or a decomposition."""
    opt = opt or Options()
    if name in GERM_SUITES:
        if isinstance(target, ZSStructure):
            target = target.germ
        return GERM_SUITES[name](target, opt)
    if name in ZS_SUITES:
        if not isinstance(target, ZSStructure):
            raise ValueError(f"suite {name!r} needs a decomposition (--left)")
        return ZS_SUITES[name](target, opt)
    raise ValueError(f"unknown suite {name!r}")
