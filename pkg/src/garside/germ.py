"""
germ: finite Garside structures presented by their simple-element tables.

A germ is the complete combinatorial datum of a finite Garside structure:
the set of divisors of the Garside element Delta ("simples"), the partial
product on simples (defined exactly when the product of two simples is
again a simple), the identity and Delta.  Everything else -- divisibility,
atoms, complements, meets and joins in both the prefix and the suffix
order -- is derived at construction time and stored in dense tables, so
all lattice queries are O(1) dictionary or bitmask lookups.

Simples are identified by small integers.  Index 0 is always the identity,
which must be named "1".  Divisibility relations are kept as bitmasks over
simple indices (one Python int per simple), which keeps germs of a few
thousand simples cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Characters that would collide with word syntax ('.'-words, '|'-normal
# forms, "D^k" prefixes) or the file format ('#' comments).
_FORBIDDEN_NAME_CHARS = set(".|#^")

# Dense meet/join tables are built eagerly up to this many simples; larger
# germs fall back to memoised on-demand computation from the bitmasks.
_DENSE_LIMIT = 256


class GermError(Exception):
    """Base class for germ construction and validation problems."""


class GermSyntaxError(GermError):
    """A germ file does not conform to the `germ v1` format."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class GermValidationError(GermError):
    """A structurally well-formed table violates a germ axiom."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        failed = ", ".join(c.axiom for c in report.checks if not c.passed)
        super().__init__(f"germ validation failed: {failed}\n{report}")


@dataclass
class CheckResult:
    axiom: str
    passed: bool
    witness: str | None = None  # human-readable counterexample on failure

    def __str__(self) -> str:
        if self.passed:
            return f"{self.axiom}: pass"
        return f"{self.axiom}: FAIL ({self.witness})"


@dataclass
class ValidationReport:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)


def _bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


class Germ:
    """
    A finite Garside structure.  Construct via parse_germ(), the builtins
    module, or make_germ(); the raw constructor expects the unit at index 0
    and rows that already contain the implied unit products.

    Immutable after construction (by convention); safe to share between
    threads.  Equality is identity; compare `names`/`delta`/`product_rows`
    directly when structural equality is needed.
    """

    def __init__(self, names: tuple[str, ...], delta: int,
                 product_rows: tuple[dict[int, int], ...]):
        n = len(names)
        if n == 0 or names[0] != "1":
            raise GermError("the unit must be present and be index 0, named '1'")
        if not 0 <= delta < n:
            raise GermError("delta index out of range")
        self.names = names
        self.unit = 0
        self.delta = delta
        self.product_rows = product_rows
        self.name_index: dict[str, int] = {nm: i for i, nm in enumerate(names)}

        # Divisibility bitmasks.  ldiv[t] holds s iff s.u = t for some u;
        # rdiv[t] holds s iff u.s = t for some u.
        ldiv = [0] * n
        rdiv = [0] * n
        for s, row in enumerate(product_rows):
            for t, u in row.items():
                ldiv[u] |= 1 << s
                rdiv[u] |= 1 << t
        self.ldiv = ldiv
        self.rdiv = rdiv

        lupper = [0] * n
        rupper = [0] * n
        for t in range(n):
            for s in _bits(ldiv[t]):
                lupper[s] |= 1 << t
            for s in _bits(rdiv[t]):
                rupper[s] |= 1 << t
        self.lupper = lupper
        self.rupper = rupper

        unit_mask = 1 << 0
        self.atoms: tuple[int, ...] = tuple(
            s for s in range(1, n) if ldiv[s] == unit_mask | (1 << s)
        )

        # Inverted product maps: _row_inv[s][v] = t with s.t = v, and
        # _col_inv[s][v] = t with t.s = v.  Cancellativity makes these
        # well defined; validation flags germs where they are not.
        self._row_inv: list[dict[int, int]] = [
            {v: t for t, v in row.items()} for row in product_rows
        ]
        col_inv: list[dict[int, int]] = [dict() for _ in range(n)]
        for t, row in enumerate(product_rows):
            for s, v in row.items():
                col_inv[s][v] = t
        self._col_inv = col_inv

        self._comp = [self._row_inv[s].get(delta, -1) for s in range(n)]
        self._rcomp = [self._col_inv[s].get(delta, -1) for s in range(n)]

        # A simple is pinned down by its divisor set, so meets and joins
        # are mask-intersection lookups.
        self._by_ldiv = {ldiv[s]: s for s in range(n)}
        self._by_rdiv = {rdiv[s]: s for s in range(n)}
        self._by_lupper = {lupper[s]: s for s in range(n)}
        self._by_rupper = {rupper[s]: s for s in range(n)}

        self.atom_len = self._compute_atom_lengths()

        self._opposite: Germ | None = None
        self._memo: dict = {}  # cross-module caches (quasi-centre table etc.)

        if n <= _DENSE_LIMIT:
            self._meet_tab = [
                [self._by_ldiv.get(ldiv[s] & ldiv[t], -1) for t in range(n)]
                for s in range(n)
            ]
            self._join_tab = [
                [self._by_lupper.get(lupper[s] & lupper[t], -1) for t in range(n)]
                for s in range(n)
            ]
            self._rmeet_tab = [
                [self._by_rdiv.get(rdiv[s] & rdiv[t], -1) for t in range(n)]
                for s in range(n)
            ]
            self._rjoin_tab = [
                [self._by_rupper.get(rupper[s] & rupper[t], -1) for t in range(n)]
                for s in range(n)
            ]
        else:
            self._meet_tab = self._join_tab = None
            self._rmeet_tab = self._rjoin_tab = None
            self._lat_memo: dict[tuple[str, int, int], int] = {}

    def _compute_atom_lengths(self) -> list[int]:
        # Divisor-set size increases strictly along proper divisibility in
        # a valid germ, so sorting by popcount is a topological order.
        n = len(self.names)
        lens = [-1] * n
        lens[self.unit] = 0
        order = sorted(range(n), key=lambda s: self.ldiv[s].bit_count())
        for s in order:
            if s == self.unit:
                continue
            best = -1
            for a in self.atoms:
                if (self.ldiv[s] >> a) & 1:
                    t = self._row_inv[a].get(s)
                    if t is not None and t != s and lens[t] >= 0:
                        best = max(best, 1 + lens[t])
            lens[s] = best  # -1 marks a simple atomicity cannot reach
        return lens

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"Germ({len(self.names)} simples, delta={self.names[self.delta]!r})"

    def name(self, s: int) -> str:
        return self.names[s]

    def simple(self, name: str) -> int:
        if name not in self.name_index:
            raise KeyError(f"unknown simple name {name!r}")
        return self.name_index[name]

    def product(self, s: int, t: int) -> int | None:
        """The product s.t if it is a simple, else None."""
        return self.product_rows[s].get(t)

    def proper_simples(self) -> tuple[int, ...]:
        return tuple(s for s in range(len(self.names))
                     if s != self.unit and s != self.delta)

    def is_atom(self, s: int) -> bool:
        return s in self.atoms

    # -- divisibility and the two lattice orders -------------------------

    def left_divides(self, s: int, t: int) -> bool:
        """s is a prefix of t: some u satisfies s.u = t."""
        return bool((self.ldiv[t] >> s) & 1)

    def right_divides(self, s: int, t: int) -> bool:
        """s is a suffix of t: some u satisfies u.s = t."""
        return bool((self.rdiv[t] >> s) & 1)

    def left_divisors(self, t: int) -> list[int]:
        return list(_bits(self.ldiv[t]))

    def right_divisors(self, t: int) -> list[int]:
        return list(_bits(self.rdiv[t]))

    def _lattice(self, kind: str, s: int, t: int) -> int:
        if kind == "meet":
            r = self._by_ldiv.get(self.ldiv[s] & self.ldiv[t], -1)
        elif kind == "join":
            r = self._by_lupper.get(self.lupper[s] & self.lupper[t], -1)
        elif kind == "rmeet":
            r = self._by_rdiv.get(self.rdiv[s] & self.rdiv[t], -1)
        else:
            r = self._by_rupper.get(self.rupper[s] & self.rupper[t], -1)
        if r < 0:
            raise GermError(
                f"no {kind} of {self.names[s]!r} and {self.names[t]!r}: "
                "germ is not a lattice")
        return r

    def meet(self, s: int, t: int) -> int:
        """Greatest common prefix of two simples."""
        if self._meet_tab is not None:
            r = self._meet_tab[s][t]
            if r >= 0:
                return r
            return self._lattice("meet", s, t)  # raises with context
        key = ("meet", s, t)
        if key not in self._lat_memo:
            self._lat_memo[key] = self._lattice("meet", s, t)
        return self._lat_memo[key]

    def join(self, s: int, t: int) -> int:
        """Least common upper bound of two simples in the prefix order."""
        if self._join_tab is not None:
            r = self._join_tab[s][t]
            if r >= 0:
                return r
            return self._lattice("join", s, t)
        key = ("join", s, t)
        if key not in self._lat_memo:
            self._lat_memo[key] = self._lattice("join", s, t)
        return self._lat_memo[key]

    def rmeet(self, s: int, t: int) -> int:
        """Greatest common suffix of two simples."""
        if self._rmeet_tab is not None:
            r = self._rmeet_tab[s][t]
            if r >= 0:
                return r
            return self._lattice("rmeet", s, t)
        key = ("rmeet", s, t)
        if key not in self._lat_memo:
            self._lat_memo[key] = self._lattice("rmeet", s, t)
        return self._lat_memo[key]

    def rjoin(self, s: int, t: int) -> int:
        """Least common upper bound of two simples in the suffix order."""
        if self._rjoin_tab is not None:
            r = self._rjoin_tab[s][t]
            if r >= 0:
                return r
            return self._lattice("rjoin", s, t)
        key = ("rjoin", s, t)
        if key not in self._lat_memo:
            self._lat_memo[key] = self._lattice("rjoin", s, t)
        return self._lat_memo[key]

    def lcomp(self, s: int, t: int) -> int:
        """The left complement s\\t: the simple u with s.u = s v t."""
        return self._row_inv[s][self.join(s, t)]

    def rcomp(self, s: int, t: int) -> int:
        """The right complement t/s: the simple u with u.s = right-join."""
        return self._col_inv[s][self.rjoin(s, t)]

    def complement(self, s: int) -> int:
        """The simple u with s.u = delta."""
        u = self._comp[s]
        if u < 0:
            raise GermError(f"simple {self.names[s]!r} has no right completion to delta")
        return u

    def rcomplement(self, s: int) -> int:
        """The simple u with u.s = delta."""
        u = self._rcomp[s]
        if u < 0:
            raise GermError(f"simple {self.names[s]!r} has no left completion to delta")
        return u

    def normal_pair(self, s: int, t: int) -> bool:
        """Left-weightedness of the adjacent pair s, t."""
        return self.meet(self.complement(s), t) == self.unit

    # -- the opposite germ ------------------------------------------------

    def opposite(self) -> Germ:
        """The germ with reversed products; cached, an involution."""
        if self._opposite is None:
            n = len(self.names)
            rows: list[dict[int, int]] = [dict() for _ in range(n)]
            for s, row in enumerate(self.product_rows):
                for t, u in row.items():
                    rows[t][s] = u
            op = Germ(self.names, self.delta, tuple(rows))
            op._opposite = self
            self._opposite = op
        return self._opposite


def make_germ(names: Iterable[str], delta_name: str,
              products: Iterable[tuple[str, str, str]],
              validate: bool = False) -> Germ:
    """
    Assemble a Germ from display names and named product triples.  Unit
    products are implied and need not be listed; explicit unit products
    must agree with the implied ones.  With validate=True the full axiom
    check runs and a failure raises GermValidationError.
    """
    names = list(names)
    seen: set[str] = set()
    for nm in names:
        check_name(nm)
        if nm in seen:
            raise GermError(f"duplicate simple name {nm!r}")
        seen.add(nm)
    if "1" not in seen:
        raise GermError('the unit simple "1" is missing')
    if delta_name not in seen:
        raise GermError(f"delta {delta_name!r} is not a listed simple")

    ordered = ["1"] + [nm for nm in names if nm != "1"]
    index = {nm: i for i, nm in enumerate(ordered)}
    n = len(ordered)
    rows: list[dict[int, int]] = [dict() for _ in range(n)]
    for s in range(n):
        rows[0][s] = s
        rows[s][0] = s
    for sn, tn, un in products:
        for nm in (sn, tn, un):
            if nm not in index:
                raise GermError(f"unknown simple name {nm!r} in product")
        s, t, u = index[sn], index[tn], index[un]
        if s == 0 or t == 0:
            if rows[s][t] != u:
                raise GermError(f"product {sn}.{tn} = {un} conflicts with the unit law")
            continue
        if t in rows[s]:
            raise GermError(f"duplicate product entry for {sn}.{tn}")
        rows[s][t] = u
    g = Germ(tuple(ordered), index[delta_name], tuple(rows))
    if validate:
        report = validate_germ(g)
        if not report.ok:
            raise GermValidationError(report)
    return g


def check_name(name: str) -> None:
    if not name:
        raise GermError("empty simple name")
    if any(ch.isspace() or ch in _FORBIDDEN_NAME_CHARS for ch in name):
        raise GermError(
            f"bad simple name {name!r}: whitespace and any of '.|#^' are not allowed")


# -- germ v1 file format ---------------------------------------------------

def parse_germ(text: str) -> Germ:
    """
    Parse the `germ v1` file format and return a fully validated Germ.

    Format (UTF-8, line based, '#' starts a comment):

        germ v1
        simples: 1 a b ab          # may be repeated, must include "1"
        delta: ab
        prod a b ab                # one line per defined product a.b = ab

    Products involving "1" are implied.  Raises GermSyntaxError for
    malformed input and GermValidationError if an axiom fails.
    """
    names: list[str] = []
    name_set: set[str] = set()
    delta_name: str | None = None
    triples: list[tuple[str, str, str, int]] = []

    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line != "germ v1":
                raise GermSyntaxError(lineno, f"expected 'germ v1' header, got {line!r}")
            header_seen = True
            continue
        if line.startswith("simples:"):
            for nm in line[len("simples:"):].split():
                try:
                    check_name(nm)
                except GermError as e:
                    raise GermSyntaxError(lineno, str(e)) from None
                if nm in name_set:
                    raise GermSyntaxError(lineno, f"duplicate simple name {nm!r}")
                name_set.add(nm)
                names.append(nm)
        elif line.startswith("delta:"):
            if delta_name is not None:
                raise GermSyntaxError(lineno, "delta given twice")
            parts = line[len("delta:"):].split()
            if len(parts) != 1:
                raise GermSyntaxError(lineno, "delta: expects exactly one name")
            delta_name = parts[0]
        elif line.startswith("prod "):
            parts = line.split()
            if len(parts) != 4:
                raise GermSyntaxError(lineno, "prod expects exactly three names")
            triples.append((parts[1], parts[2], parts[3], lineno))
        else:
            raise GermSyntaxError(lineno, f"unrecognised directive {line.split()[0]!r}")

    if not header_seen:
        raise GermSyntaxError(1, "empty germ file")
    if "1" not in name_set:
        raise GermSyntaxError(1, 'the unit simple "1" is missing from simples:')
    if delta_name is None:
        raise GermSyntaxError(1, "no delta: line")
    if delta_name not in name_set:
        raise GermSyntaxError(1, f"delta {delta_name!r} is not a listed simple")

    for sn, tn, un, lineno in triples:
        for nm in (sn, tn, un):
            if nm not in name_set:
                raise GermSyntaxError(lineno, f"unknown simple name {nm!r}")

    try:
        g = make_germ(names, delta_name, [(s, t, u) for s, t, u, _ in triples])
    except GermError as e:
        # duplicate / conflicting product entries carry no line info here;
        # find the offending line for a better message
        msg = str(e)
        for sn, tn, un, lineno in triples:
            if f"{sn}.{tn}" in msg:
                raise GermSyntaxError(lineno, msg) from None
        raise GermSyntaxError(1, msg) from None

    report = validate_germ(g)
    if not report.ok:
        raise GermValidationError(report)
    return g


def format_germ(g: Germ) -> str:
    """Serialise a germ back to the `germ v1` format (canonical order)."""
    lines = ["germ v1", "simples: " + " ".join(g.names), f"delta: {g.names[g.delta]}"]
    for s, row in enumerate(g.product_rows):
        if s == g.unit:
            continue
        for t in sorted(row):
            if t == g.unit:
                continue
            lines.append(f"prod {g.names[s]} {g.names[t]} {g.names[row[t]]}")
    return "\n".join(lines) + "\n"


# -- validation -------------------------------------------------------------

def validate_germ(g: Germ) -> ValidationReport:
    """
    Exhaustively check the local germ axioms: unit laws, partial
    associativity, cancellativity, the two complement bijections, the
    balanced Garside element, the lattice property of both divisibility
    orders, and atom generation.  Failures carry witnesses; nothing raises.
    """
    checks = [
        CheckResult("identity", *_check_identity(g)),
        CheckResult("associativity", *_check_associativity(g)),
        CheckResult("cancellativity", *_check_cancellativity(g)),
        CheckResult("complements", *_check_complements(g)),
        CheckResult("balanced-delta", *_check_balanced(g)),
        CheckResult("lattice", *_check_lattice(g)),
        CheckResult("atoms", *_check_atoms(g)),
    ]
    return ValidationReport(checks)


def _check_identity(g: Germ) -> tuple[bool, str | None]:
    for s in range(len(g)):
        if g.product(g.unit, s) != s:
            return False, f"1.{g.names[s]} != {g.names[s]}"
        if g.product(s, g.unit) != s:
            return False, f"{g.names[s]}.1 != {g.names[s]}"
    return True, None


def _check_associativity(g: Germ) -> tuple[bool, str | None]:
    nm = g.names
    for s, row_s in enumerate(g.product_rows):
        for t, st in row_s.items():
            for u, st_u in g.product_rows[st].items():
                # (s.t).u defined; if t.u is defined, s.(t.u) must be too
                tu = g.product(t, u)
                if tu is None:
                    continue
                s_tu = g.product(s, tu)
                if s_tu is None:
                    return False, f"({nm[s]}.{nm[t]}).{nm[u]} defined but {nm[s]}.({nm[t]}.{nm[u]}) is not"
                if s_tu != st_u:
                    return False, f"({nm[s]}.{nm[t]}).{nm[u]} != {nm[s]}.({nm[t]}.{nm[u]})"
    for t, row_t in enumerate(g.product_rows):
        for u, tu in row_t.items():
            for s, s_tu in ((s, g.product_rows[s].get(tu)) for s in range(len(g))):
                if s_tu is None:
                    continue
                st = g.product(s, t)
                if st is None:
                    continue
                if g.product(st, u) != s_tu:
                    return False, f"{nm[s]}.({nm[t]}.{nm[u]}) defined but disagrees with ({nm[s]}.{nm[t]}).{nm[u]}"
    return True, None


def _check_cancellativity(g: Germ) -> tuple[bool, str | None]:
    nm = g.names
    for s, row in enumerate(g.product_rows):
        seen: dict[int, int] = {}
        for t, u in row.items():
            if u in seen:
                return False, f"{nm[s]}.{nm[seen[u]]} = {nm[s]}.{nm[t]} = {nm[u]}"
            seen[u] = t
    cols: list[dict[int, int]] = [dict() for _ in range(len(g))]
    for t, row in enumerate(g.product_rows):
        for s, u in row.items():
            if u in cols[s]:
                return False, f"{nm[cols[s][u]]}.{nm[s]} = {nm[t]}.{nm[s]} = {nm[u]}"
            cols[s][u] = t
    return True, None


def _check_complements(g: Germ) -> tuple[bool, str | None]:
    nm = g.names
    n = len(g)
    for s in range(n):
        right = [t for t, u in g.product_rows[s].items() if u == g.delta]
        if len(right) != 1:
            return False, f"{nm[s]} has {len(right)} right completions to delta (expected 1)"
        left = [t for t in range(n) if g.product_rows[t].get(s) == g.delta]
        if len(left) != 1:
            return False, f"{nm[s]} has {len(left)} left completions to delta (expected 1)"
    comp = [g._comp[s] for s in range(n)]
    if sorted(comp) != list(range(n)):
        return False, "the complement map is not a bijection on simples"
    for s in range(n):
        if g._rcomp[comp[s]] != s:
            return False, f"left and right complements are not mutually inverse at {nm[s]}"
    return True, None


def _check_balanced(g: Germ) -> tuple[bool, str | None]:
    full = (1 << len(g)) - 1
    if g.ldiv[g.delta] != full:
        missing = next(s for s in range(len(g)) if not (g.ldiv[g.delta] >> s) & 1)
        return False, f"{g.names[missing]} is not a prefix of delta"
    if g.rdiv[g.delta] != full:
        missing = next(s for s in range(len(g)) if not (g.rdiv[g.delta] >> s) & 1)
        return False, f"{g.names[missing]} is not a suffix of delta"
    return True, None


def _check_lattice(g: Germ) -> tuple[bool, str | None]:
    nm = g.names
    n = len(g)
    for s in range(n):
        if not (g.ldiv[s] >> s) & 1 or not (g.rdiv[s] >> s) & 1:
            return False, f"divisibility is not reflexive at {nm[s]}"
    for t in range(n):
        for s in _bits(g.ldiv[t]):
            if s != t and (g.ldiv[s] >> t) & 1:
                return False, f"prefix order not antisymmetric: {nm[s]}, {nm[t]}"
            if g.ldiv[s] & g.ldiv[t] != g.ldiv[s]:
                return False, f"prefix order not transitive below {nm[t]} at {nm[s]}"
        for s in _bits(g.rdiv[t]):
            if s != t and (g.rdiv[s] >> t) & 1:
                return False, f"suffix order not antisymmetric: {nm[s]}, {nm[t]}"
            if g.rdiv[s] & g.rdiv[t] != g.rdiv[s]:
                return False, f"suffix order not transitive below {nm[t]} at {nm[s]}"
    for s in range(n):
        for t in range(s, n):
            if g.ldiv[s] & g.ldiv[t] not in g._by_ldiv:
                return False, f"{nm[s]} and {nm[t]} have no prefix meet"
            if g.lupper[s] & g.lupper[t] not in g._by_lupper:
                return False, f"{nm[s]} and {nm[t]} have no prefix join"
            if g.rdiv[s] & g.rdiv[t] not in g._by_rdiv:
                return False, f"{nm[s]} and {nm[t]} have no suffix meet"
            if g.rupper[s] & g.rupper[t] not in g._by_rupper:
                return False, f"{nm[s]} and {nm[t]} have no suffix join"
    return True, None


def _check_atoms(g: Germ) -> tuple[bool, str | None]:
    nm = g.names
    for s, row in enumerate(g.product_rows):
        for t, u in row.items():
            if u == g.unit and (s != g.unit or t != g.unit):
                return False, f"{nm[s]}.{nm[t]} = 1 with a non-trivial factor"
    for s in range(len(g)):
        if s == g.unit:
            continue
        if not any((g.ldiv[s] >> a) & 1 for a in g.atoms):
            return False, f"{nm[s]} has no atom as a prefix"
        if g.atom_len[s] < 0:
            return False, f"atom stripping does not terminate at {nm[s]}"
    return True, None
