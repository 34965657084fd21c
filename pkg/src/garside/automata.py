"""
automata: finite-state acceptors for the regular languages of normal-form
words over a simple-element alphabet.

The acceptor has one state per alphabet letter ("the last letter read"),
a start state and a dead state; every state except dead accepts.  A letter
y is live after x exactly when the pair x, y is left weighted, so a word
is accepted iff it is in normal form.  The "proper" variant reads letters
from the proper simples; the "full" variant admits Delta as an ordinary
letter.

translate_pair_to_product rebuilds the product monoid's acceptor from the
two factor acceptors and the action tables alone, without consulting the
product lattice; project_product_to_pair is the inverse restriction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .germ import Germ
from .zappa_szep import ZSStructure


@dataclass(frozen=True)
class NFAutomaton:
    """
    Deterministic complete acceptor.  States: 0 is start, 1..L are the
    letter states in alphabet order, L+1 is dead.  All states accept
    except dead.
    """
    letters: tuple[int, ...]               # alphabet, as SimpleIds, ascending
    letter_names: tuple[str, ...]
    transitions: tuple[tuple[int, ...], ...]  # [state][letter position] -> state

    @property
    def n_states(self) -> int:
        return len(self.letters) + 2

    @property
    def dead(self) -> int:
        return len(self.letters) + 1

    def is_accepting(self, state: int) -> bool:
        return state != self.dead

    def state_name(self, state: int) -> str:
        if state == 0:
            return "start"
        if state == self.dead:
            return "dead"
        return self.letter_names[state - 1]

    def step(self, state: int, letter: int) -> int:
        """Next state on reading a letter (a SimpleId)."""
        try:
            pos = self.letters.index(letter)
        except ValueError:
            return self.dead
        return self.transitions[state][pos]

    def accepts(self, word) -> bool:
        state = 0
        for letter in word:
            state = self.step(state, letter)
        return self.is_accepting(state)


def build_nf_automaton(g: Germ, variant: str = "proper") -> NFAutomaton:
    """
    Acceptor of the normal-form language of a germ.  variant="proper"
    uses the proper simples as alphabet; variant="full" additionally
    admits Delta.
    """
    letters = _variant_alphabet(g, variant)
    return _build_from_liveness(
        letters, tuple(g.names[s] for s in letters),
        lambda x, y: g.normal_pair(x, y))


def _variant_alphabet(g: Germ, variant: str) -> tuple[int, ...]:
    if variant == "proper":
        return g.proper_simples()
    if variant == "full":
        return tuple(s for s in range(len(g)) if s != g.unit)
    raise ValueError(f"unknown automaton variant {variant!r}")


def _build_from_liveness(letters, names, live) -> NFAutomaton:
    pos = {s: i for i, s in enumerate(letters)}
    dead = len(letters) + 1
    rows = [tuple(1 + pos[y] for y in letters)]  # start: every letter is live
    for x in letters:
        rows.append(tuple(1 + pos[y] if live(x, y) else dead for y in letters))
    rows.append(tuple(dead for _ in letters))
    return NFAutomaton(tuple(letters), tuple(names), tuple(rows))


def build_factor_automaton(zs: ZSStructure, side: str, variant: str = "full") -> NFAutomaton:
    """
    Acceptor for the normal-form language of the parabolic factor G or H,
    over its own simples, using the factor complement.
    """
    g = zs.germ
    if side == "G":
        simples, delta, comp = zs.g_simples, zs.delta_g, zs.comp_g
    elif side == "H":
        simples, delta, comp = zs.h_simples, zs.delta_h, zs.comp_h
    else:
        raise ValueError("side must be 'G' or 'H'")
    letters = tuple(s for s in simples if s != g.unit)
    if variant == "proper":
        letters = tuple(s for s in letters if s != delta)
    elif variant != "full":
        raise ValueError(f"unknown automaton variant {variant!r}")
    return _build_from_liveness(
        letters, tuple(g.names[s] for s in letters),
        lambda x, y: g.meet(comp(x), y) == g.unit)


def translate_pair_to_product(zs: ZSStructure, a_g: NFAutomaton,
                              a_h: NFAutomaton) -> NFAutomaton:
    """
    The product monoid's acceptor, assembled from full-variant factor
    acceptors.  Letters are the joins of factor-letter pairs; liveness is
    decided by the factor acceptors and the action tables only.
    """
    g = zs.germ
    unit = g.unit
    if set(a_g.letters) != {s for s in zs.g_simples if s != unit}:
        raise ValueError("a_g must be the full-variant G acceptor")
    if set(a_h.letters) != {s for s in zs.h_simples if s != unit}:
        raise ValueError("a_h must be the full-variant H acceptor")

    pair_of: dict[int, tuple[int, int]] = {}
    for gs in (unit,) + a_g.letters:
        for hs in (unit,) + a_h.letters:
            if gs == unit and hs == unit:
                continue
            pair_of[zs.join_gh(gs, hs)] = (gs, hs)
    letters = tuple(sorted(pair_of))

    g_pos = {s: i + 1 for i, s in enumerate(a_g.letters)}
    h_pos = {s: i + 1 for i, s in enumerate(a_h.letters)}

    def g_live(x: int, y: int) -> bool:
        # comp_G(x) meet y == 1, read off the G acceptor
        if x == unit:
            return y == unit
        if y == unit:
            return True
        return a_g.transitions[g_pos[x]][g_pos[y] - 1] != a_g.dead

    def h_live(x: int, y: int) -> bool:
        if x == unit:
            return y == unit
        if y == unit:
            return True
        return a_h.transitions[h_pos[x]][h_pos[y] - 1] != a_h.dead

    def live(k1: int, k2: int) -> bool:
        g1, h1 = pair_of[k1]
        g2, h2 = pair_of[k2]
        return (g_live(zs.act_rr_inv(h1, g1), g2)
                and h_live(zs.act_lr_inv(g1, h1), h2))

    return _build_from_liveness(
        letters, tuple(g.names[s] for s in letters), live)


def project_product_to_pair(zs: ZSStructure,
                            a_k: NFAutomaton) -> tuple[NFAutomaton, NFAutomaton]:
    """
    Restrict a product-monoid acceptor to the letters of each factor.
    Words over one factor are normal in the product iff normal in the
    factor, so the restrictions are the factor acceptors.
    """
    g = zs.germ

    def restrict(members) -> NFAutomaton:
        letters = tuple(s for s in a_k.letters if members(s))
        pos = {s: a_k.letters.index(s) for s in letters}
        return _build_from_liveness(
            letters, tuple(g.names[s] for s in letters),
            lambda x, y: a_k.transitions[1 + pos[x]][pos[y]] != a_k.dead)

    return restrict(zs.member_g), restrict(zs.member_h)


def count_accepted(a: NFAutomaton, n: int) -> int:
    """Number of accepted words of length exactly n."""
    counts = [0] * a.n_states
    counts[0] = 1
    for _ in range(n):
        nxt = [0] * a.n_states
        for state, c in enumerate(counts):
            if not c:
                continue
            for pos in range(len(a.letters)):
                nxt[a.transitions[state][pos]] += c
        counts = nxt
    return sum(c for state, c in enumerate(counts) if a.is_accepting(state))


def enumerate_accepted(a: NFAutomaton, n: int, limit: int = 1_000_000) -> list[tuple[int, ...]]:
    """All accepted words of length exactly n, as letter tuples."""
    total = count_accepted(a, n)
    if total > limit:
        raise ValueError(f"{total} words of length {n} exceeds the enumeration limit {limit}")
    out: list[tuple[int, ...]] = []
    word: list[int] = []

    def grow(state: int) -> None:
        if len(word) == n:
            out.append(tuple(word))
            return
        for pos, letter in enumerate(a.letters):
            nxt = a.transitions[state][pos]
            if nxt != a.dead:
                word.append(letter)
                grow(nxt)
                word.pop()

    grow(0)
    return out


def export(a: NFAutomaton, fmt: str) -> str:
    """
    DOT digraph (live transitions only) or TSV transition table (complete,
    including the dead state).  Output order is fixed by state and
    alphabet order, so exports are stable.
    """
    if fmt == "dot":
        lines = ["digraph nf {", "  rankdir=LR;",
                 '  start [shape=diamond];', '  node [shape=doublecircle];']
        for i in range(1, len(a.letters) + 1):
            lines.append(f'  "{a.state_name(i)}";')
        for state in range(len(a.letters) + 1):
            for pos, letter in enumerate(a.letters):
                nxt = a.transitions[state][pos]
                if nxt != a.dead:
                    lines.append(
                        f'  "{a.state_name(state)}" -> "{a.state_name(nxt)}"'
                        f' [label="{a.letter_names[pos]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "tsv":
        lines = ["state\tletter\tnext"]
        for state in range(a.n_states):
            for pos in range(len(a.letters)):
                lines.append(f"{a.state_name(state)}\t{a.letter_names[pos]}\t"
                             f"{a.state_name(a.transitions[state][pos])}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")
