"""
normal_forms: translating between normal forms of the product monoid and
pairs of normal forms of the two factors.

split_nf peels the G-part off a normal word of K factor by factor;
merge_nf pushes the G-factors of a pair back through the H-word.  Both
loops produce only words that are already normal -- that invariant is the
substance of their correctness, so it is asserted at every step rather
than repaired.  phi/phi_inv package the two loops as mutually inverse
bijections; psi is the lcm variant, reduced to phi by an inverse action.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import element, zappa_szep
from .element import NormalWord
from .zappa_szep import ZSStructure


@dataclass(frozen=True)
class NFPair:
    """Normal forms of the two components of a GH-decomposition.

    The deltas field of nf_g counts powers of delta_G (and of nf_h powers
    of delta_H): each component is normal within its parabolic factor.
    """
    nf_g: NormalWord
    nf_h: NormalWord


def _g_letters(zs: ZSStructure, w: NormalWord) -> tuple[int, ...]:
    return (zs.delta_g,) * w.deltas + w.factors


def _h_letters(zs: ZSStructure, w: NormalWord) -> tuple[int, ...]:
    return (zs.delta_h,) * w.deltas + w.factors


def _from_letters(zs: ZSStructure, word: list[int], delta: int) -> NormalWord:
    # In a normal word all delta letters lead; fold them into the count.
    k = 0
    while k < len(word) and word[k] == delta:
        k += 1
    return NormalWord(k, tuple(word[k:]))


def _word_is_normal(g, word: list[int]) -> bool:
    if any(s == g.unit for s in word):
        return False
    return all(g.normal_pair(word[i], word[i + 1]) for i in range(len(word) - 1))


# -- pairwise normality from factor data -------------------------------------

def is_normal_gh_gh(zs: ZSStructure, g1: int, h1: int, g2: int, h2: int) -> bool:
    """Whether the pair g1.h1, g2.h2 is left weighted with g2.h2 non-trivial."""
    g = zs.germ
    if g2 == g.unit and h2 == g.unit:
        return False
    return (g.meet(zs.comp_g(zs.act_ll(g1, h1)), g2) == g.unit
            and g.meet(zs.comp_h(h1), zs.act_lr(g2, h2)) == g.unit)


def is_normal_gh_hg(zs: ZSStructure, g1: int, h1: int, h2: int, g2: int) -> bool:
    """Normality of the pair g1.h1, h2.g2."""
    g = zs.germ
    if g2 == g.unit and h2 == g.unit:
        return False
    return (g.meet(zs.comp_g(zs.act_ll(g1, h1)), zs.act_rr(h2, g2)) == g.unit
            and g.meet(zs.comp_h(h1), h2) == g.unit)


def is_normal_hg_gh(zs: ZSStructure, h1: int, g1: int, g2: int, h2: int) -> bool:
    """Normality of the pair h1.g1, g2.h2."""
    g = zs.germ
    if g2 == g.unit and h2 == g.unit:
        return False
    return (g.meet(zs.comp_g(g1), g2) == g.unit
            and g.meet(zs.comp_h(zs.act_rl(h1, g1)), zs.act_lr(g2, h2)) == g.unit)


def is_normal_hg_hg(zs: ZSStructure, h1: int, g1: int, h2: int, g2: int) -> bool:
    """Normality of the pair h1.g1, h2.g2."""
    g = zs.germ
    if g2 == g.unit and h2 == g.unit:
        return False
    return (g.meet(zs.comp_g(g1), zs.act_rr(h2, g2)) == g.unit
            and g.meet(zs.comp_h(zs.act_rl(h1, g1)), h2) == g.unit)


# -- the two translation loops ------------------------------------------------

def split_nf(zs: ZSStructure, w: NormalWord) -> NFPair:
    """
    Given the normal form of k with GH-decomposition k = g.h, return the
    normal forms of g and of h.  Repeatedly GH-decompose each factor, peel
    the leading G-part, and re-associate the H-parts with the following
    G-parts.  Every intermediate word is already normal.
    """
    g = zs.germ
    assert element.is_normal(g, w), "split_nf expects a normal word"
    word = list(element.letters(g, w))
    word_g: list[int] = []
    while word:
        pairs = [zs.gh_pair[x] for x in word]
        if pairs[0][0] == g.unit:
            break
        word_g.append(pairs[0][0])
        new = []
        for i in range(len(pairs) - 1):
            k = g.product(pairs[i][1], pairs[i + 1][0])
            assert k is not None, "re-associated factor left the simples"
            new.append(k)
        if pairs[-1][1] != g.unit:
            new.append(pairs[-1][1])
        word = new
        assert _word_is_normal(g, word), "split_nf produced a non-normal word"
    assert all(zs.member_h(x) for x in word), "residue is not an H-word"
    assert _word_is_normal(g, word_g), "split_nf produced a non-normal G-word"
    return NFPair(_from_letters(zs, word_g, zs.delta_g),
                  _from_letters(zs, word, zs.delta_h))


def merge_nf(zs: ZSStructure, p: NFPair) -> NormalWord:
    """
    Normal form of g1..gm h1..hn from the factor normal forms, without any
    renormalisation: the last G-factor is pushed through the word using
    HG-decompositions of its factors, staying normal at every step.
    """
    g = zs.germ
    gw = list(_g_letters(zs, p.nf_g))
    hw = list(_h_letters(zs, p.nf_h))
    if not all(zs.member_g(x) for x in gw) or not _word_is_normal(g, gw):
        raise ValueError("nf_g is not a normal word over the G-simples")
    if not all(zs.member_h(x) for x in hw) or not _word_is_normal(g, hw):
        raise ValueError("nf_h is not a normal word over the H-simples")
    word = hw
    while gw:
        last = gw.pop()
        if not word:
            word = [last]
        else:
            pairs = [zs.hg_pair[x] for x in word]
            new = [g.product(last, pairs[0][0])]
            for i in range(len(pairs) - 1):
                new.append(g.product(pairs[i][1], pairs[i + 1][0]))
            if pairs[-1][1] != g.unit:
                new.append(pairs[-1][1])
            assert all(k is not None for k in new), "pushed factor left the simples"
            word = new
        assert _word_is_normal(g, word), "merge_nf produced a non-normal word"
    return _from_letters(zs, word, g.delta)


# -- the bijections ------------------------------------------------------------

def phi(zs: ZSStructure, p: NFPair) -> NormalWord:
    """The normal form of (product of nf_g) . (product of nf_h)."""
    return merge_nf(zs, p)


def phi_inv(zs: ZSStructure, w: NormalWord) -> NFPair:
    return split_nf(zs, w)


def psi(zs: ZSStructure, p: NFPair) -> NormalWord:
    """
    The normal form of lcm(product of nf_g, product of nf_h), computed by
    applying the inverse action of the G-part to the H-word (which stays
    normal) and then merging.
    """
    g = zs.germ
    gw = _g_letters(zs, p.nf_g)
    hw = _h_letters(zs, p.nf_h)
    acted = list(zappa_szep.act_lr_inv_word(zs, gw, hw))
    assert _word_is_normal(g, acted), "inverse action broke normality of the H-word"
    return merge_nf(zs, NFPair(p.nf_g, _from_letters(zs, acted, zs.delta_h)))
