"""
builtins: known-correct germ constructors, used both as fixtures and as
CLI entry points (--germ braid:4, abelian:3, wreath, prod:...,..., file:...).

braid_germ models simples as permutations with products defined when
inversion counts add; free_abelian_germ uses subsets with disjoint-union
products; wreath_example_germ is the three-generator monoid whose c swaps
the two commuting generators.  direct_product_germ pairs two germs
componentwise, and divisor_germ cuts the divisor germ of an arbitrary
balanced element out of an ambient germ (failing with a witness when the
element is not balanced).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import element
from .element import NormalWord
from .germ import (CheckResult, Germ, GermValidationError,
                   ValidationReport, make_germ, parse_germ)

BRAID_MAX = 7
ABELIAN_MAX = 10


def braid_germ(n: int) -> Germ:
    """
    The braid monoid on n strands: simples are the permutations of n
    points, the product of two is defined when their inversion counts add,
    and Delta is the order-reversing permutation.
    """
    if not 2 <= n <= BRAID_MAX:
        raise ValueError(f"braid_germ expects 2 <= n <= {BRAID_MAX}")
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    index = {p: i for i, p in enumerate(perms)}
    inv = [_inversions(p) for p in perms]

    def name(p: tuple[int, ...]) -> str:
        if p == tuple(range(n)):
            return "1"
        return "".join(str(i + 1) for i in p)

    names = [name(p) for p in perms]
    delta = index[tuple(reversed(range(n)))]
    rows: list[dict[int, int]] = [dict() for _ in perms]
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            pq = tuple(p[q[k]] for k in range(n))
            if inv[i] + inv[j] == _inversions(pq):
                rows[i][j] = index[pq]
    return Germ(tuple(names), delta, tuple(rows))


def _inversions(p: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def free_abelian_germ(k: int) -> Germ:
    """
    The free abelian monoid of rank k: simples are the subsets of the k
    generators, products are unions of disjoint subsets, Delta is the full
    set.  k = 0 gives the trivial germ.
    """
    if not 0 <= k <= ABELIAN_MAX:
        raise ValueError(f"free_abelian_germ expects 0 <= k <= {ABELIAN_MAX}")

    def name(mask: int) -> str:
        if mask == 0:
            return "1"
        return "".join(f"e{i + 1}" for i in range(k) if (mask >> i) & 1)

    n = 1 << k
    names = [name(m) for m in range(n)]
    rows: list[dict[int, int]] = [dict() for _ in range(n)]
    for s in range(n):
        for t in range(n):
            if s & t == 0:
                rows[s][t] = s | t
    return Germ(tuple(names), n - 1, tuple(rows))


def wreath_example_germ() -> Germ:
    """
    The eight-simple germ of the monoid generated by a, b, c subject to
    ab = ba, ac = cb, bc = ca: two commuting generators swapped by a third.
    Elements are modelled as ((x, y), e) with coordinates capped at 1.
    """
    data = {
        "1": ((0, 0), 0), "a": ((1, 0), 0), "b": ((0, 1), 0), "c": ((0, 0), 1),
        "ab": ((1, 1), 0), "ac": ((1, 0), 1), "bc": ((0, 1), 1), "abc": ((1, 1), 1),
    }
    names = list(data)
    rows_by_name = []
    for sn, ((x, y), e) in data.items():
        for tn, ((p, q), f) in data.items():
            if e:
                p, q = q, p
            nx, ny, ne = x + p, y + q, e + f
            if nx <= 1 and ny <= 1 and ne <= 1:
                un = next(nm for nm, v in data.items() if v == ((nx, ny), ne))
                if sn != "1" and tn != "1":
                    rows_by_name.append((sn, tn, un))
    return make_germ(names, "abc", rows_by_name)


def direct_product_germ(g1: Germ, g2: Germ) -> Germ:
    """
    The direct product: simples are pairs named "s*t", products work
    componentwise, both defined or the pair product is undefined.
    """
    pairs = list(itertools.product(range(len(g1)), range(len(g2))))
    index = {p: i for i, p in enumerate(pairs)}

    def name(s1: int, s2: int) -> str:
        if s1 == g1.unit and s2 == g2.unit:
            return "1"
        return f"{g1.names[s1]}*{g2.names[s2]}"

    names = [name(s1, s2) for s1, s2 in pairs]
    delta = index[(g1.delta, g2.delta)]
    rows: list[dict[int, int]] = [dict() for _ in pairs]
    for i, (s1, s2) in enumerate(pairs):
        for j, (t1, t2) in enumerate(pairs):
            u1 = g1.product(s1, t1)
            u2 = g2.product(s2, t2)
            if u1 is not None and u2 is not None:
                rows[i][j] = index[(u1, u2)]
    return Germ(tuple(names), delta, tuple(rows))


def divisor_germ(g: Germ, d: NormalWord) -> Germ:
    """
    The germ whose simples are the divisors of the element d in the monoid
    of g.  d must be balanced (same prefixes as suffixes); otherwise a
    GermValidationError with a witness element is raised.  The result is
    fully validated, so a non-lattice divisor set also fails loudly.
    """
    witness = element.balance_witness(g, d)
    if witness is not None:
        report = ValidationReport([CheckResult(
            "balanced-delta", False,
            f"element {element.format_nf(g, witness)} divides "
            f"{element.format_nf(g, d)} on one side only")])
        raise GermValidationError(report)
    divisors = sorted(element.left_divisor_set(g, d),
                      key=lambda w: (element.atom_length(g, w), w.deltas, w.factors))

    def name(w: NormalWord) -> str:
        if w == element.UNIT:
            return "1"
        return "_".join(g.names[s] for s in element.letters(g, w))

    names = [name(w) for w in divisors]
    index = {w: i for i, w in enumerate(divisors)}
    div_set = set(divisors)
    triples = []
    for x in divisors:
        for y in divisors:
            z = element.multiply(g, x, y)
            if z in div_set and x != element.UNIT and y != element.UNIT:
                triples.append((name(x), name(y), names[index[z]]))
    return make_germ(names, names[index[d]], triples, validate=True)


# -- the CLI germ specification ------------------------------------------------

@dataclass(frozen=True)
class GermSpec:
    """A parsed --germ argument: family tag plus parameters."""
    family: str
    params: tuple

    @staticmethod
    def parse(text: str) -> "GermSpec":
        if text == "wreath":
            return GermSpec("wreath", ())
        if text.startswith("braid:"):
            return GermSpec("braid", (_int_param(text, "braid:"),))
        if text.startswith("abelian:"):
            return GermSpec("abelian", (_int_param(text, "abelian:"),))
        if text.startswith("file:"):
            return GermSpec("file", (text[len("file:"):],))
        if text.startswith("prod:"):
            rest = text[len("prod:"):]
            # the comma splitting the two sub-specs is the first one where
            # both halves parse
            for i, ch in enumerate(rest):
                if ch != ",":
                    continue
                try:
                    left = GermSpec.parse(rest[:i])
                    right = GermSpec.parse(rest[i + 1:])
                except ValueError:
                    continue
                return GermSpec("prod", (left, right))
            raise ValueError(f"cannot split product spec {text!r}")
        raise ValueError(
            f"unknown germ spec {text!r} (expected wreath, braid:N, abelian:K, "
            "prod:SPEC,SPEC or file:PATH)")

    def build(self) -> Germ:
        if self.family == "wreath":
            return wreath_example_germ()
        if self.family == "braid":
            return braid_germ(self.params[0])
        if self.family == "abelian":
            return free_abelian_germ(self.params[0])
        if self.family == "prod":
            return direct_product_germ(self.params[0].build(), self.params[1].build())
        if self.family == "file":
            with open(self.params[0], encoding="utf-8") as fh:
                return parse_germ(fh.read())
        raise ValueError(f"unknown germ family {self.family!r}")


def _int_param(text: str, prefix: str) -> int:
    try:
        return int(text[len(prefix):])
    except ValueError:
        raise ValueError(f"bad integer in germ spec {text!r}") from None


def germ_from_spec(text: str) -> Germ:
    """Build a germ from a spec string like braid:4 or prod:braid:3,abelian:1."""
    return GermSpec.parse(text).build()
