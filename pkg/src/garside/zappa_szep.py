"""
zappa_szep: two-sided decompositions K = G |><| H of the monoid of a germ.

A bipartition of the atoms into unions of quasi-central classes induces
two parabolic submonoids G and H such that every element factors uniquely
as g.h and as h.g.  Rewriting one factorisation into the other defines
four actions on simples:

    h . g = (h |> g)(h <| g)        g . h = (g |>> h)(g <<| h)

written here act_rr/act_rl (h acting on g from the left / the companion)
and act_lr/act_ll.  The structure precomputes all four tables and their
inverse permutations; actions of words fold through the tables using the
product rules, so nothing beyond the simple-by-simple tables is stored.

build() re-verifies every structural invariant (parabolicity, unique
decompositions of all simples, bijectivity of the actions) instead of
trusting the classification; a failure raises DecompositionFailure with
a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import element, quasicenter
from .element import NormalWord
from .germ import Germ


class ZSError(Exception):
    pass


class NotAUnionOfClasses(ZSError):
    """The requested atom bipartition does not respect the class partition."""


class DecompositionFailure(ZSError):
    """A structural invariant failed while building or using a decomposition."""


@dataclass(eq=False)
class ZSStructure:
    germ: Germ
    left_atoms: tuple[int, ...]           # atom set generating G
    right_atoms: tuple[int, ...]          # atom set generating H
    g_simples: tuple[int, ...]            # simples lying in G
    h_simples: tuple[int, ...]            # simples lying in H
    delta_g: int                          # join of g_simples; product with delta_h is delta
    delta_h: int
    gh_pair: dict[int, tuple[int, int]]   # simple k -> its unique (g, h) with g.h = k
    hg_pair: dict[int, tuple[int, int]]   # simple k -> its unique (h, g) with h.g = k
    _rr: dict[tuple[int, int], int]       # (h, g) -> h |> g
    _rl: dict[tuple[int, int], int]       # (h, g) -> h <| g
    _lr: dict[tuple[int, int], int]       # (g, h) -> g |>> h
    _ll: dict[tuple[int, int], int]       # (g, h) -> g <<| h
    _rr_inv: dict[tuple[int, int], int]
    _rl_inv: dict[tuple[int, int], int]
    _lr_inv: dict[tuple[int, int], int]
    _ll_inv: dict[tuple[int, int], int]

    # -- membership ------------------------------------------------------

    def member_g(self, s: int) -> bool:
        """A simple lies in G exactly when it divides delta_G."""
        return self.germ.left_divides(s, self.delta_g)

    def member_h(self, s: int) -> bool:
        return self.germ.left_divides(s, self.delta_h)

    def comp_g(self, s: int) -> int:
        """Complement within the factor G: the simple u with s.u = delta_G."""
        return self.germ.lcomp(s, self.delta_g)

    def comp_h(self, s: int) -> int:
        return self.germ.lcomp(s, self.delta_h)

    # -- the four actions and their inverses, on simples ------------------

    def _lookup(self, table: dict[tuple[int, int], int], a: int, b: int,
                dom_a: str, dom_b: str) -> int:
        try:
            return table[(a, b)]
        except KeyError:
            nm = self.germ.names
            raise ValueError(
                f"action argument outside its simple set: expected "
                f"({dom_a}, {dom_b}), got ({nm[a]}, {nm[b]})") from None

    def act_rr(self, h: int, g: int) -> int:
        """h |> g."""
        return self._lookup(self._rr, h, g, "H-simple", "G-simple")

    def act_rl(self, h: int, g: int) -> int:
        """h <| g."""
        return self._lookup(self._rl, h, g, "H-simple", "G-simple")

    def act_lr(self, g: int, h: int) -> int:
        """g |>> h."""
        return self._lookup(self._lr, g, h, "G-simple", "H-simple")

    def act_ll(self, g: int, h: int) -> int:
        """g <<| h."""
        return self._lookup(self._ll, g, h, "G-simple", "H-simple")

    def act_rr_inv(self, h: int, g: int) -> int:
        """h^-1 |> g: the inverse permutation of g -> h |> g."""
        return self._lookup(self._rr_inv, h, g, "H-simple", "G-simple")

    def act_rl_inv(self, h: int, g: int) -> int:
        """h <| g^-1."""
        return self._lookup(self._rl_inv, h, g, "H-simple", "G-simple")

    def act_lr_inv(self, g: int, h: int) -> int:
        """g^-1 |>> h."""
        return self._lookup(self._lr_inv, g, h, "G-simple", "H-simple")

    def act_ll_inv(self, g: int, h: int) -> int:
        """g <<| h^-1."""
        return self._lookup(self._ll_inv, g, h, "G-simple", "H-simple")

    def join_gh(self, g: int, h: int) -> int:
        """lcm(g, h) computed factor-side: g.(g^-1 |>> h)."""
        k = self.germ.product(g, self.act_lr_inv(g, h))
        assert k is not None
        return k


def build(g: Germ, left_atoms: Iterable[int]) -> ZSStructure:
    """
    Build and fully verify the decomposition induced by taking G to be
    generated by `left_atoms` (a non-empty proper union of atom classes)
    and H by the remaining atoms.
    """
    germ = g
    left = tuple(sorted(set(left_atoms)))
    part = quasicenter.atom_classes(germ)
    class_of = {a: i for i, block in enumerate(part.classes) for a in block}
    for a in left:
        if a not in class_of:
            raise NotAUnionOfClasses(f"{germ.names[a]} is not an atom")
    chosen = {class_of[a] for a in left}
    covered = tuple(sorted(a for i in chosen for a in part.classes[i]))
    if covered != left:
        raise NotAUnionOfClasses(
            "the left atom set must be a union of quasi-central atom classes; "
            f"classes: {[tuple(germ.names[a] for a in c) for c in part.classes]}")
    if not chosen or len(chosen) == len(part.classes):
        raise NotAUnionOfClasses(
            "the bipartition must be non-empty and proper on both sides")
    right = tuple(a for a in germ.atoms if a not in set(left))

    in_g = _generated_simples(germ, left)
    in_h = _generated_simples(germ, right)

    delta_g = germ.unit
    for s in in_g:
        delta_g = germ.join(delta_g, s)
    delta_h = germ.unit
    for s in in_h:
        delta_h = germ.join(delta_h, s)

    # The class-wise construction must give the same Garside elements.
    dg_from_classes = germ.unit
    dh_from_classes = germ.unit
    table = quasicenter._delta_table(germ)
    for a in left:
        dg_from_classes = germ.join(dg_from_classes, table[a])
    for a in right:
        dh_from_classes = germ.join(dh_from_classes, table[a])
    if dg_from_classes != delta_g or dh_from_classes != delta_h:
        raise DecompositionFailure(
            "join of generated simples disagrees with the join of the "
            "atom-class values")

    # Parabolicity: the divisors of delta_G are exactly the simples in G.
    if set(germ.left_divisors(delta_g)) != set(in_g):
        raise DecompositionFailure(
            f"divisors of {germ.names[delta_g]} are not the simples "
            "generated by the left atoms")
    if set(germ.left_divisors(delta_h)) != set(in_h):
        raise DecompositionFailure(
            f"divisors of {germ.names[delta_h]} are not the simples "
            "generated by the right atoms")

    if germ.product(delta_g, delta_h) != germ.delta or \
            germ.product(delta_h, delta_g) != germ.delta:
        raise DecompositionFailure(
            f"{germ.names[delta_g]}.{germ.names[delta_h]} is not delta")

    g_simples = tuple(sorted(in_g))
    h_simples = tuple(sorted(in_h))

    gh_pair: dict[int, tuple[int, int]] = {}
    hg_pair: dict[int, tuple[int, int]] = {}
    for gs in g_simples:
        for hs in h_simples:
            k = germ.product(gs, hs)
            if k is None:
                raise DecompositionFailure(
                    f"{germ.names[gs]}.{germ.names[hs]} is not simple")
            if k in gh_pair:
                o = gh_pair[k]
                raise DecompositionFailure(
                    f"two GH-factorisations of {germ.names[k]}: "
                    f"({germ.names[o[0]]},{germ.names[o[1]]}) and "
                    f"({germ.names[gs]},{germ.names[hs]})")
            gh_pair[k] = (gs, hs)
            k2 = germ.product(hs, gs)
            if k2 is None:
                raise DecompositionFailure(
                    f"{germ.names[hs]}.{germ.names[gs]} is not simple")
            if k2 in hg_pair:
                o2 = hg_pair[k2]
                raise DecompositionFailure(
                    f"two HG-factorisations of {germ.names[k2]}: "
                    f"({germ.names[o2[0]]},{germ.names[o2[1]]}) and "
                    f"({germ.names[hs]},{germ.names[gs]})")
            hg_pair[k2] = (hs, gs)
    if len(gh_pair) != len(germ) or len(hg_pair) != len(germ):
        missing = next(s for s in range(len(germ)) if s not in gh_pair or s not in hg_pair)
        raise DecompositionFailure(
            f"{germ.names[missing]} has no factorisation over the bipartition")

    rr: dict[tuple[int, int], int] = {}
    rl: dict[tuple[int, int], int] = {}
    lr: dict[tuple[int, int], int] = {}
    ll: dict[tuple[int, int], int] = {}
    for hs in h_simples:
        for gs in g_simples:
            g1, h1 = gh_pair[germ.product(hs, gs)]
            rr[(hs, gs)] = g1
            rl[(hs, gs)] = h1
    for gs in g_simples:
        for hs in h_simples:
            h1, g1 = hg_pair[germ.product(gs, hs)]
            lr[(gs, hs)] = h1
            ll[(gs, hs)] = g1

    rr_inv: dict[tuple[int, int], int] = {}
    rl_inv: dict[tuple[int, int], int] = {}
    lr_inv: dict[tuple[int, int], int] = {}
    ll_inv: dict[tuple[int, int], int] = {}
    for hs in h_simples:
        if {rr[(hs, gs)] for gs in g_simples} != set(g_simples):
            raise DecompositionFailure(
                f"{germ.names[hs]} |> . is not a bijection of the G-simples")
        for gs in g_simples:
            rr_inv[(hs, rr[(hs, gs)])] = gs
    for gs in g_simples:
        if {rl[(hs, gs)] for hs in h_simples} != set(h_simples):
            raise DecompositionFailure(
                f". <| {germ.names[gs]} is not a bijection of the H-simples")
        for hs in h_simples:
            rl_inv[(rl[(hs, gs)], gs)] = hs
    for gs in g_simples:
        if {lr[(gs, hs)] for hs in h_simples} != set(h_simples):
            raise DecompositionFailure(
                f"{germ.names[gs]} |>> . is not a bijection of the H-simples")
        for hs in h_simples:
            lr_inv[(gs, lr[(gs, hs)])] = hs
    for hs in h_simples:
        if {ll[(gs, hs)] for gs in g_simples} != set(g_simples):
            raise DecompositionFailure(
                f". <<| {germ.names[hs]} is not a bijection of the G-simples")
        for gs in g_simples:
            ll_inv[(ll[(gs, hs)], hs)] = gs

    return ZSStructure(
        germ=germ, left_atoms=left, right_atoms=right,
        g_simples=g_simples, h_simples=h_simples,
        delta_g=delta_g, delta_h=delta_h,
        gh_pair=gh_pair, hg_pair=hg_pair,
        _rr=rr, _rl=rl, _lr=lr, _ll=ll,
        _rr_inv=rr_inv, _rl_inv=rl_inv, _lr_inv=lr_inv, _ll_inv=ll_inv,
    )


def _generated_simples(g: Germ, atoms: Sequence[int]) -> list[int]:
    # The simples generated by an atom subset, by stripping atoms in a
    # topological order of the prefix relation.
    atom_set = set(atoms)
    member = [False] * len(g)
    member[g.unit] = True
    order = sorted(range(len(g)), key=lambda s: g.ldiv[s].bit_count())
    for s in order:
        if s == g.unit:
            continue
        for a in atom_set:
            if (g.ldiv[s] >> a) & 1 and member[g._row_inv[a][s]]:
                member[s] = True
                break
    return [s for s in range(len(g)) if member[s]]


# -- element-level decompositions -------------------------------------------

def element_in_g(zs: ZSStructure, w: NormalWord) -> bool:
    return w.deltas == 0 and all(zs.member_g(f) for f in w.factors)


def element_in_h(zs: ZSStructure, w: NormalWord) -> bool:
    return w.deltas == 0 and all(zs.member_h(f) for f in w.factors)


def gh_decompose(zs: ZSStructure, x: NormalWord) -> tuple[NormalWord, NormalWord]:
    """
    The unique (g, h) with g.h = x.  The G-part is the gcd of x with a
    high enough power of delta_G; the H-part is the remaining complement.
    """
    g = zs.germ
    n = element.atom_length(g, x)
    bound = element.normal_form(g, (zs.delta_g,) * max(n, 1))
    gpart = element.gcd(g, x, bound)
    hpart = element.left_complement(g, gpart, x)
    if not element_in_h(zs, hpart) or element.multiply(g, gpart, hpart) != x:
        raise DecompositionFailure(
            f"GH-decomposition failed for {element.format_nf(g, x)}")
    return gpart, hpart


def hg_decompose(zs: ZSStructure, x: NormalWord) -> tuple[NormalWord, NormalWord]:
    """The unique (h, g) with h.g = x."""
    g = zs.germ
    n = element.atom_length(g, x)
    bound = element.normal_form(g, (zs.delta_h,) * max(n, 1))
    hpart = element.gcd(g, x, bound)
    gpart = element.left_complement(g, hpart, x)
    if not element_in_g(zs, gpart) or element.multiply(g, hpart, gpart) != x:
        raise DecompositionFailure(
            f"HG-decomposition failed for {element.format_nf(g, x)}")
    return hpart, gpart


# -- actions on words --------------------------------------------------------
#
# A single simple acts on a word through the product rules; a word acts by
# folding its letters through the single-letter case in action order.  The
# *_word functions take (actor word, acted word) in the same argument
# order as the simple-level tables.

def _check_word(zs: ZSStructure, word: Sequence[int], side: str) -> None:
    ok = zs.member_g if side == "G" else zs.member_h
    for s in word:
        if not ok(s):
            raise ValueError(
                f"{zs.germ.names[s]!r} is not a {side}-simple")


def _rr_one(zs: ZSStructure, h: int, gw: Sequence[int]) -> list[int]:
    out = []
    cur = h
    for gs in gw:
        out.append(zs.act_rr(cur, gs))
        cur = zs.act_rl(cur, gs)
    return out


def _rl_one(zs: ZSStructure, hw: Sequence[int], g: int) -> list[int]:
    out = []
    cur = g
    for hs in reversed(hw):
        out.append(zs.act_rl(hs, cur))
        cur = zs.act_rr(hs, cur)
    return out[::-1]


def _lr_one(zs: ZSStructure, g: int, hw: Sequence[int]) -> list[int]:
    out = []
    cur = g
    for hs in hw:
        out.append(zs.act_lr(cur, hs))
        cur = zs.act_ll(cur, hs)
    return out


def _ll_one(zs: ZSStructure, gw: Sequence[int], h: int) -> list[int]:
    out = []
    cur = h
    for gs in reversed(gw):
        out.append(zs.act_ll(gs, cur))
        cur = zs.act_lr(gs, cur)
    return out[::-1]


def act_rr_word(zs: ZSStructure, hw: Sequence[int], gw: Sequence[int]) -> tuple[int, ...]:
    """(h-word) |> (g-word)."""
    _check_word(zs, hw, "H")
    _check_word(zs, gw, "G")
    out = list(gw)
    for h in reversed(hw):
        out = _rr_one(zs, h, out)
    return tuple(out)


def act_rl_word(zs: ZSStructure, hw: Sequence[int], gw: Sequence[int]) -> tuple[int, ...]:
    """(h-word) <| (g-word)."""
    _check_word(zs, hw, "H")
    _check_word(zs, gw, "G")
    out = list(hw)
    for g in gw:
        out = _rl_one(zs, out, g)
    return tuple(out)


def act_lr_word(zs: ZSStructure, gw: Sequence[int], hw: Sequence[int]) -> tuple[int, ...]:
    """(g-word) |>> (h-word)."""
    _check_word(zs, gw, "G")
    _check_word(zs, hw, "H")
    out = list(hw)
    for g in reversed(gw):
        out = _lr_one(zs, g, out)
    return tuple(out)


def act_ll_word(zs: ZSStructure, gw: Sequence[int], hw: Sequence[int]) -> tuple[int, ...]:
    """(g-word) <<| (h-word)."""
    _check_word(zs, gw, "G")
    _check_word(zs, hw, "H")
    out = list(gw)
    for h in hw:
        out = _ll_one(zs, out, h)
    return tuple(out)


def _rr_inv_one(zs: ZSStructure, h: int, gw: Sequence[int]) -> list[int]:
    out = []
    cur = h
    for gs in gw:
        out.append(zs.act_rr_inv(cur, gs))
        cur = zs.act_lr_inv(gs, cur)
    return out


def _rl_inv_one(zs: ZSStructure, hw: Sequence[int], g: int) -> list[int]:
    out = []
    cur = g
    for hs in reversed(hw):
        out.append(zs.act_rl_inv(hs, cur))
        cur = zs.act_ll_inv(cur, hs)
    return out[::-1]


def _lr_inv_one(zs: ZSStructure, g: int, hw: Sequence[int]) -> list[int]:
    out = []
    cur = g
    for hs in hw:
        out.append(zs.act_lr_inv(cur, hs))
        cur = zs.act_rr_inv(hs, cur)
    return out


def _ll_inv_one(zs: ZSStructure, gw: Sequence[int], h: int) -> list[int]:
    out = []
    cur = h
    for gs in reversed(gw):
        out.append(zs.act_ll_inv(gs, cur))
        cur = zs.act_rl_inv(cur, gs)
    return out[::-1]


def act_rr_inv_word(zs: ZSStructure, hw: Sequence[int], gw: Sequence[int]) -> tuple[int, ...]:
    """(h-word)^-1 |> (g-word)."""
    _check_word(zs, hw, "H")
    _check_word(zs, gw, "G")
    out = list(gw)
    for h in hw:
        out = _rr_inv_one(zs, h, out)
    return tuple(out)


def act_rl_inv_word(zs: ZSStructure, hw: Sequence[int], gw: Sequence[int]) -> tuple[int, ...]:
    """(h-word) <| (g-word)^-1."""
    _check_word(zs, hw, "H")
    _check_word(zs, gw, "G")
    out = list(hw)
    for g in reversed(gw):
        out = _rl_inv_one(zs, out, g)
    return tuple(out)


def act_lr_inv_word(zs: ZSStructure, gw: Sequence[int], hw: Sequence[int]) -> tuple[int, ...]:
    """(g-word)^-1 |>> (h-word)."""
    _check_word(zs, gw, "G")
    _check_word(zs, hw, "H")
    out = list(hw)
    for g in gw:
        out = _lr_inv_one(zs, g, out)
    return tuple(out)


def act_ll_inv_word(zs: ZSStructure, gw: Sequence[int], hw: Sequence[int]) -> tuple[int, ...]:
    """(g-word) <<| (h-word)^-1."""
    _check_word(zs, gw, "G")
    _check_word(zs, hw, "H")
    out = list(gw)
    for h in reversed(hw):
        out = _ll_inv_one(zs, out, h)
    return tuple(out)


WORD_ACTIONS = {
    "rr": act_rr_word,
    "rl": act_rl_word,
    "lr": act_lr_word,
    "ll": act_ll_word,
    "rr-inv": act_rr_inv_word,
    "rl-inv": act_rl_inv_word,
    "lr-inv": act_lr_inv_word,
    "ll-inv": act_ll_inv_word,
}
