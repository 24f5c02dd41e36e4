"""Lie superalgebras as sparse graded bracket tables.

Structure constants are stored once per canonical pair ``(i, j)`` with
``i <= j`` in generator order; the reversed bracket is read through the graded
antisymmetry rule ``[y, x} = -(-1)^{|x||y|} [x, y}``.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import BaseNumber, Scalar, as_scalar
from .linalg import SingularMap, invert

__all__ = [
    "BracketTable",
    "DimensionReport",
    "Generator",
    "InconsistentRelation",
    "LinComb",
    "MatchReport",
    "ParityViolation",
    "SingularMap",
    "SplitReport",
    "SplitSpec",
    "StarStructure",
    "TableBuilder",
    "UnknownGenerator",
    "backward_map",
    "bracket",
    "change_basis",
    "check_graded_jacobi",
    "check_split_structure",
    "check_star_compatibility",
    "compare_tables",
    "dimension_report",
    "direct_sum",
    "dumps",
    "loads",
]

EVEN, ODD = 0, 1


class UnknownGenerator(KeyError):
    pass


class ParityViolation(ValueError):
    pass


class InconsistentRelation(ValueError):
    """Two relations assign different values to the same bracket."""


@dataclass(frozen=True)
class Generator:
    name: str
    labels: tuple = ()
    parity: int = field(default=EVEN, compare=False)
    weight: Fraction | None = field(default=None, compare=False)

    def __post_init__(self):
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", self.name):
            raise ValueError(f"bad generator name {self.name!r}")

    @property
    def odd(self) -> bool:
        return self.parity == ODD

    def __str__(self) -> str:
        if not self.labels:
            return self.name
        return f"{self.name}[{','.join(str(x) for x in self.labels)}]"

    __repr__ = __str__


class LinComb:
    """Sparse linear combination ``{Generator: Scalar}`` without zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        out = {}
        if terms:
            for g, c in terms.items():
                c = as_scalar(c)
                if not c.is_zero():
                    out[g] = c
        self.terms = out

    @classmethod
    def of(cls, g: Generator, coef=1) -> LinComb:
        return cls({g: coef})

    @classmethod
    def zero(cls) -> LinComb:
        return cls()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: LinComb) -> LinComb:
        if not other.terms:
            return self
        out = dict(self.terms)
        for g, c in other.terms.items():
            v = out.get(g)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(g, None)
            else:
                out[g] = v
        res = LinComb()
        res.terms = out
        return res

    def __neg__(self) -> LinComb:
        res = LinComb()
        res.terms = {g: -c for g, c in self.terms.items()}
        return res

    def __sub__(self, other: LinComb) -> LinComb:
        return self + (-other)

    def scale(self, s) -> LinComb:
        s = as_scalar(s)
        if s.is_zero():
            return LinComb()
        res = LinComb()
        res.terms = {g: c * s for g, c in self.terms.items()}
        return res

    def __mul__(self, s) -> LinComb:
        return self.scale(s)

    __rmul__ = __mul__

    def coeff(self, g: Generator) -> Scalar:
        return self.terms.get(g, Scalar.const(0))

    def map_coeffs(self, f: Callable[[Scalar], Scalar]) -> LinComb:
        return LinComb({g: f(c) for g, c in self.terms.items()})

    def support(self) -> set:
        return set(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def render(self, order: Mapping | None = None) -> str:
        if not self.terms:
            return "0"
        key = (lambda g: order[g]) if order is not None else (lambda g: (g.name, g.labels))
        parts = []
        for g in sorted(self.terms, key=key):
            c = self.terms[g]
            txt = c.render()
            neg = False
            if _is_compound(txt):
                body = f"({txt})*{g}"
            else:
                if txt.startswith("-"):
                    neg, txt = True, txt[1:]
                body = str(g) if txt == "1" else f"{txt}*{g}"
            parts.append((neg, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"LinComb({self.render()})"


def _is_compound(rendered: str) -> bool:
    return " + " in rendered or " - " in rendered


def lc_sum(items: Iterable[LinComb]) -> LinComb:
    out: dict = {}
    for item in items:
        for g, c in item.terms.items():
            v = out.get(g)
            out[g] = c if v is None else v + c
    return LinComb(out)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


class BracketTable:
    """Immutable structure-constant table of a Lie superalgebra."""

    def __init__(
        self,
        gens: Iterable[Generator],
        entries: Mapping[tuple, LinComb] | None = None,
        meta: Mapping | None = None,
    ):
        self.gens: tuple[Generator, ...] = tuple(gens)
        self.index: dict[Generator, int] = {g: k for k, g in enumerate(self.gens)}
        if len(self.index) != len(self.gens):
            dup = [g for g, n in Counter(self.gens).items() if n > 1]
            raise ValueError(f"duplicate generators {dup}")
        self.parity = tuple(g.parity for g in self.gens)
        self.meta = dict(meta or {})
        self._entries: dict[tuple[int, int], dict[int, Scalar]] = {}
        self._full: dict | None = None
        for (a, b), value in (entries or {}).items():
            self._store(a, b, value)

    def _store(self, a: Generator, b: Generator, value: LinComb) -> None:
        try:
            i, j = self.index[a], self.index[b]
        except KeyError as exc:
            raise UnknownGenerator(str(exc)) from None
        coeffs = {}
        for g, c in value.terms.items():
            if g not in self.index:
                raise UnknownGenerator(f"{g} in [{a}, {b}] is not a generator of this table")
            if (self.parity[i] + self.parity[j]) % 2 != g.parity:
                raise ParityViolation(f"[{a}, {b}}} contains {g} of wrong parity")
            coeffs[self.index[g]] = c
        if i > j:
            i, j = j, i
            sign = -1 if not (self.parity[i] and self.parity[j]) else 1
            coeffs = {k: c * sign for k, c in coeffs.items()}
        if i == j and not self.parity[i] and coeffs:
            raise InconsistentRelation(f"[{a}, {a}] of an even generator must vanish")
        if coeffs:
            self._entries[(i, j)] = coeffs
        else:
            self._entries.pop((i, j), None)

    # access ----------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.gens)

    @property
    def dim(self) -> int:
        return len(self.gens)

    def gen(self, name: str, *labels) -> Generator:
        g = Generator(name, tuple(labels))
        if g not in self.index:
            raise UnknownGenerator(str(g))
        return self.gens[self.index[g]]

    def lc(self, name: str, *labels, coef=1) -> LinComb:
        return LinComb.of(self.gen(name, *labels), coef)

    def entries(self):
        """Iterate ``((i, j), {k: coeff})`` over stored canonical pairs, sorted."""
        for key in sorted(self._entries):
            yield key, self._entries[key]

    def entry(self, i: int, j: int) -> dict[int, Scalar]:
        """Bracket of generators i and j (any order) as ``{k: coeff}``."""
        if i <= j:
            return self._entries.get((i, j), {})
        e = self._entries.get((j, i))
        if not e:
            return {}
        if self.parity[i] and self.parity[j]:
            return e
        return {k: -c for k, c in e.items()}

    def full(self) -> dict[tuple[int, int], dict[int, object]]:
        """Ordered lookup for both orders; BaseNumber coefficients when possible."""
        if self._full is None:
            pure = self.is_constant()
            full = {}
            for (i, j), e in self._entries.items():
                e1 = {k: (c.constant_value() if pure else c) for k, c in e.items()}
                full[(i, j)] = e1
                if i != j:
                    if self.parity[i] and self.parity[j]:
                        full[(j, i)] = e1
                    else:
                        full[(j, i)] = {k: -c for k, c in e1.items()}
            self._full = full
        return self._full

    def is_constant(self) -> bool:
        return all(c.constant_value() is not None for e in self._entries.values() for c in e.values())

    def params(self) -> set[str]:
        out = set()
        for e in self._entries.values():
            for c in e.values():
                out |= c.params()
        return out

    def u_powers(self) -> set[int]:
        out = set()
        for e in self._entries.values():
            for c in e.values():
                out |= c.u_powers()
        return out

    def bracket_gens(self, a: Generator, b: Generator) -> LinComb:
        try:
            i, j = self.index[a], self.index[b]
        except KeyError as exc:
            raise UnknownGenerator(str(exc)) from None
        return LinComb({self.gens[k]: c for k, c in self.entry(i, j).items()})

    def map_coeffs(self, f: Callable[[Scalar], Scalar], meta: Mapping | None = None) -> BracketTable:
        out = BracketTable(self.gens, meta=self.meta if meta is None else meta)
        for (i, j), e in self._entries.items():
            new = {k: f(c) for k, c in e.items()}
            new = {k: c for k, c in new.items() if not c.is_zero()}
            if new:
                out._entries[(i, j)] = new
        return out

    def substitute(self, assignment: Mapping) -> BracketTable:
        meta = dict(self.meta)
        meta["substituted"] = {k: as_scalar(v).render() for k, v in sorted(assignment.items())}
        return self.map_coeffs(lambda c: c.substitute(assignment), meta)

    def with_meta(self, **kw) -> BracketTable:
        out = self.map_coeffs(lambda c: c)
        out.meta.update(kw)
        return out

    def subtable(self, gens: Iterable[Generator]) -> BracketTable:
        """Restriction to a subset closed under brackets."""
        keep = [g for g in self.gens if g in set(gens)]
        out = BracketTable(keep, meta=self.meta)
        for a in keep:
            for b in keep:
                if self.index[a] <= self.index[b]:
                    v = self.bracket_gens(a, b)
                    if v:
                        out._store(a, b, v)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketTable):
            return NotImplemented
        return self.gens == other.gens and self.parity == other.parity and self._entries == other._entries

    def __repr__(self) -> str:
        fam = self.meta.get("family", "?")
        return f"<BracketTable {fam}: {self.dim} generators, {len(self._entries)} brackets>"


class TableBuilder:
    """Collects relations for a table and rejects contradictory ones."""

    def __init__(self, gens: Iterable[Generator], meta: Mapping | None = None):
        self.table = BracketTable(gens, meta=meta)
        self._set: set[tuple[int, int]] = set()

    def set(self, a: Generator, b: Generator, value: LinComb) -> None:
        t = self.table
        i, j = t.index[a], t.index[b]
        key = (min(i, j), max(i, j))
        if key in self._set:
            current = t.bracket_gens(a, b)
            if current != value:
                raise InconsistentRelation(
                    f"[{a}, {b}}}: {current.render(t.index)} vs {value.render(t.index)}"
                )
            return
        t._store(a, b, value)
        self._set.add(key)

    def apply_rule(self, rule: Callable[[Generator, Generator], LinComb | None]) -> None:
        """Evaluate ``rule`` on every ordered pair; ``None`` means "not specified"."""
        for a in self.table.gens:
            for b in self.table.gens:
                v = rule(a, b)
                if v is not None:
                    self.set(a, b, v)

    def build(self) -> BracketTable:
        return self.table


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def bracket(t: BracketTable, x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of the stored structure constants."""
    out: dict[int, Scalar] = {}
    for ga, ca in x.terms.items():
        if ga not in t.index:
            raise UnknownGenerator(str(ga))
        i = t.index[ga]
        for gb, cb in y.terms.items():
            if gb not in t.index:
                raise UnknownGenerator(str(gb))
            e = t.entry(i, t.index[gb])
            if not e:
                continue
            f = ca * cb
            for k, c in e.items():
                v = out.get(k)
                out[k] = f * c if v is None else v + f * c
    return LinComb({t.gens[k]: c for k, c in out.items()})


def _jacobi_for_first(t: BracketTable, a_range: Iterable[int]) -> list[tuple[tuple[int, int, int], dict]]:
    full = t.full()
    par = t.parity
    n = len(t.gens)
    out = []
    for a in a_range:
        pa = par[a]
        for b in range(a, n):
            pb = par[b]
            for c in range(b, n):
                pc = par[c]
                acc: dict = {}
                # (-1)^{ac}[a,[b,c}} + (-1)^{ba}[b,[c,a}} + (-1)^{cb}[c,[a,b}}
                for x, y, z, neg in (
                    (a, b, c, pa and pc),
                    (b, c, a, pb and pa),
                    (c, a, b, pc and pb),
                ):
                    inner = full.get((y, z))
                    if not inner:
                        continue
                    for g, c1 in inner.items():
                        outer = full.get((x, g))
                        if not outer:
                            continue
                        f = -c1 if neg else c1
                        for h, c2 in outer.items():
                            v = acc.get(h)
                            acc[h] = f * c2 if v is None else v + f * c2
                nz = {h: v for h, v in acc.items() if not v.is_zero()}
                if nz:
                    out.append(((a, b, c), nz))
    return out


def _jacobi_chunk(args):
    t, a_values = args
    return _jacobi_for_first(t, a_values)


def check_graded_jacobi(t: BracketTable, jobs: int = 1) -> list[tuple[tuple[Generator, Generator, Generator], LinComb]]:
    """Nonzero graded Jacobi residuals over all triples i <= j <= k, sorted by triple."""
    n = len(t.gens)
    if jobs > 1 and n > 8:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [(t, list(range(k, n, jobs))) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = [r for part in pool.map(_jacobi_chunk, chunks) for r in part]
        raw.sort(key=lambda item: item[0])
    else:
        raw = _jacobi_for_first(t, range(n))
    out = []
    for (a, b, c), coeffs in raw:
        lc = LinComb({t.gens[h]: (v if isinstance(v, Scalar) else Scalar.const(v)) for h, v in coeffs.items()})
        out.append(((t.gens[a], t.gens[b], t.gens[c]), lc))
    return out


def change_basis(
    t: BracketTable,
    m: Mapping[Generator, LinComb],
    new_gens: Iterable[Generator] | None = None,
    meta: Mapping | None = None,
) -> BracketTable:
    """Rewrite ``t`` in a new basis.

    ``m`` expresses every old generator as a combination of the new ones.
    """
    missing = [g for g in t.gens if g not in m]
    if missing:
        raise SingularMap(f"map does not cover {missing[:5]}")
    if new_gens is None:
        seen: dict = {}
        for g in t.gens:
            for h in m[g].terms:
                seen.setdefault(h, None)
        new_gens = list(seen)
    new_gens = tuple(new_gens)
    nidx = {g: k for k, g in enumerate(new_gens)}
    n = len(t.gens)
    if len(new_gens) != n:
        raise SingularMap(f"{n} old generators but {len(new_gens)} new ones")
    rows = []
    for g in t.gens:
        row = {}
        for h, c in m[g].terms.items():
            if h not in nidx:
                raise UnknownGenerator(f"{h} (image of {g}) is not among the new generators")
            if h.parity != g.parity:
                raise ParityViolation(f"{g} mapped onto {h} of different parity")
            row[nidx[h]] = c
        rows.append(row)
    # rows[old][new]; its inverse gives new generators in terms of old ones
    inv = invert(rows, n)  # inv[new][old]
    out = BracketTable(new_gens, meta=dict(t.meta if meta is None else meta))
    for k in range(n):
        for l in range(k, n):
            acc: dict[int, Scalar] = {}
            for g, cg in inv[k].items():
                for h, ch in inv[l].items():
                    e = t.entry(g, h)
                    if not e:
                        continue
                    f = cg * ch
                    for old, c in e.items():
                        for new, cm in rows[old].items():
                            v = acc.get(new)
                            w = f * c * cm
                            acc[new] = w if v is None else v + w
            acc = {x: v for x, v in acc.items() if not v.is_zero()}
            if acc:
                if k == l and not out.parity[k]:
                    raise InconsistentRelation(f"basis change produced [{new_gens[k]}, {new_gens[k]}] != 0")
                out._entries[(k, l)] = acc
    return out


def inverse_map(t: BracketTable, m: Mapping[Generator, LinComb], new_gens: Iterable[Generator]) -> dict:
    """Given old -> new map ``m``, return new -> old map."""
    new_gens = tuple(new_gens)
    nidx = {g: k for k, g in enumerate(new_gens)}
    rows = [{nidx[h]: c for h, c in m[g].terms.items()} for g in t.gens]
    inv = invert(rows, len(t.gens))
    return {new_gens[k]: LinComb({t.gens[o]: c for o, c in inv[k].items()}) for k in range(len(new_gens))}


def backward_map(old_gens, new_gens, forward: Mapping[Generator, LinComb]) -> dict:
    """Invert a new -> old map (each new generator in the old basis) into old -> new."""
    old_gens, new_gens = tuple(old_gens), tuple(new_gens)
    oidx = {g: k for k, g in enumerate(old_gens)}
    rows = [{oidx[h]: c for h, c in forward[g].terms.items()} for g in new_gens]
    inv = invert(rows, len(rows))  # inv[old][new]
    return {old_gens[o]: LinComb({new_gens[k]: c for k, c in inv[o].items()}) for o in range(len(rows))}


def rename(t: BracketTable, f: Callable[[Generator], Generator], meta: Mapping | None = None) -> BracketTable:
    new = tuple(f(g) for g in t.gens)
    out = BracketTable(new, meta=dict(t.meta if meta is None else meta))
    out._entries = {k: dict(v) for k, v in t._entries.items()}
    return out


def scale_constants(t: BracketTable, s) -> BracketTable:
    """Multiply every structure constant by ``s`` (uniform generator rescaling by ``s``)."""
    s = as_scalar(s)
    return t.map_coeffs(lambda c: c * s)


def direct_sum(t1: BracketTable, t2: BracketTable, suffixes: tuple[str, str] = ("L", "R")) -> BracketTable:
    """Direct sum with generator names suffixed ``_L`` / ``_R``; cross brackets vanish."""

    def tag(g: Generator, s: str) -> Generator:
        return Generator(f"{g.name}_{s}", g.labels, g.parity, g.weight)

    gens = [tag(g, suffixes[0]) for g in t1.gens] + [tag(g, suffixes[1]) for g in t2.gens]
    out = BracketTable(
        gens,
        meta={"family": f"{t1.meta.get('family', 'A')}+{t2.meta.get('family', 'B')}", "summands": [t1.meta, t2.meta]},
    )
    n1 = len(t1.gens)
    for (i, j), e in t1._entries.items():
        out._entries[(i, j)] = dict(e)
    for (i, j), e in t2._entries.items():
        out._entries[(i + n1, j + n1)] = {k + n1: c for k, c in e.items()}
    return out


@dataclass(frozen=True)
class SplitSpec:
    plus: frozenset
    minus: frozenset

    @classmethod
    def of(cls, plus: Iterable[Generator], minus: Iterable[Generator]) -> SplitSpec:
        p, m = frozenset(plus), frozenset(minus)
        if p & m:
            raise ValueError(f"split parts overlap: {sorted(map(str, p & m))[:5]}")
        return cls(p, m)

    @classmethod
    def by_names(cls, t: BracketTable, plus_names: Iterable[str]) -> SplitSpec:
        names = set(plus_names)
        return cls.of([g for g in t.gens if g.name in names], [g for g in t.gens if g.name not in names])

    def is_total(self, t: BracketTable) -> bool:
        return self.plus | self.minus == set(t.gens)


@dataclass
class SplitReport:
    ok: bool
    mode: str
    violations: list

    def __bool__(self) -> bool:
        return self.ok


SPLIT_MODES = ("semidirect", "graded_abelian_minus", "symmetric_pair", "subalgebra_plus")


def check_split_structure(t: BracketTable, s: SplitSpec, mode: str) -> SplitReport:
    """Check a PLUS/MINUS decomposition.

    semidirect: PLUS closes, [PLUS, MINUS} in MINUS, [MINUS, MINUS} in MINUS.
    graded_abelian_minus: semidirect and [MINUS, MINUS} = 0.
    symmetric_pair: [h, h] in h, [h, k] in k, [k, k] in h (h = PLUS, k = MINUS).
    subalgebra_plus: PLUS closes.
    The last two accept a partial split (a sector of the algebra).
    """
    if mode not in SPLIT_MODES:
        raise ValueError(f"unknown split mode {mode!r}")
    if mode in ("semidirect", "graded_abelian_minus") and not s.is_total(t):
        raise ValueError("split must be a total partition for this mode")
    plus = [g for g in t.gens if g in s.plus]
    minus = [g for g in t.gens if g in s.minus]
    violations = []

    def require(part_a, part_b, target, label):
        for a in part_a:
            for b in part_b:
                if t.index[a] > t.index[b] and part_a is part_b:
                    continue
                v = t.bracket_gens(a, b)
                if target is None:
                    if v:
                        violations.append((label, str(a), str(b), v.render(t.index)))
                    continue
                bad = [g for g in v.terms if g not in target]
                if bad:
                    violations.append((label, str(a), str(b), v.render(t.index)))

    P, M = s.plus, s.minus
    if mode == "symmetric_pair":
        require(plus, plus, P, "[h,h]")
        require(plus, minus, M, "[h,k]")
        require(minus, minus, P, "[k,k]")
    else:
        require(plus, plus, P, "[+,+]")
        if mode != "subalgebra_plus":
            require(plus, minus, M, "[+,-]")
            if mode == "graded_abelian_minus":
                require(minus, minus, None, "[-,-]")
            else:
                require(minus, minus, M, "[-,-]")
    return SplitReport(not violations, mode, violations)


class StarStructure:
    """Antilinear map on generators; extended with complex conjugation of coefficients."""

    def __init__(self, images: Mapping[Generator, LinComb]):
        self.images = dict(images)

    def apply(self, x: LinComb) -> LinComb:
        out = LinComb()
        for g, c in x.terms.items():
            try:
                img = self.images[g]
            except KeyError:
                raise UnknownGenerator(f"star not defined on {g}") from None
            out = out + img.scale(c.conjugate())
        return out

    def __call__(self, x):
        if isinstance(x, Generator):
            x = LinComb.of(x)
        return self.apply(x)


@dataclass
class StarReport:
    ok: bool
    involutive: bool
    violations: list

    def __bool__(self) -> bool:
        return self.ok


def check_star_compatibility(t: BracketTable, star: StarStructure) -> StarReport:
    """star([X,Y}) == -(-1)^{|X||Y|} [star X, star Y} on all canonical pairs."""
    violations = []
    involutive = True
    for g in t.gens:
        back = star.apply(star.apply(LinComb.of(g)))
        if back != LinComb.of(g):
            involutive = False
            violations.append(("involution", str(g), back.render(t.index)))
    images = {g: star.apply(LinComb.of(g)) for g in t.gens}
    for i, a in enumerate(t.gens):
        for b in t.gens[i:]:
            lhs = star.apply(t.bracket_gens(a, b))
            rhs = bracket(t, images[a], images[b])
            sign = 1 if (a.odd and b.odd) else -1
            if lhs != rhs.scale(sign):
                violations.append((str(a), str(b), lhs.render(t.index), rhs.scale(sign).render(t.index)))
    return StarReport(not violations, involutive, violations)


@dataclass
class DimensionReport:
    even: int
    odd: int
    families: dict

    def as_tuple(self) -> tuple[int, int]:
        return (self.even, self.odd)


def dimension_report(t: BracketTable) -> DimensionReport:
    fam = Counter(g.name for g in t.gens)
    even = sum(1 for g in t.gens if not g.odd)
    return DimensionReport(even, len(t.gens) - even, dict(sorted(fam.items())))


# ---------------------------------------------------------------------------
# comparison
# ---------------------------------------------------------------------------


@dataclass
class MatchReport:
    ok: bool
    mode: str
    scales: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _structure_equations(t1: BracketTable, t2: BracketTable, id_map: Mapping[Generator, Generator]):
    """Yield (a, b, c, C1, C2) over all canonical pairs of t1 and targets in either table."""
    inv = {v: k for k, v in id_map.items()}
    for i, a in enumerate(t1.gens):
        for b in t1.gens[i:]:
            v1 = t1.bracket_gens(a, b)
            v2raw = t2.bracket_gens(id_map[a], id_map[b])
            v2 = LinComb({inv[g]: c for g, c in v2raw.terms.items()})
            for c in sorted(set(v1.terms) | set(v2.terms), key=t1.index.__getitem__):
                yield a, b, c, v1.coeff(c), v2.coeff(c)


def _check_bijection(t1, t2, id_map):
    if set(id_map) != set(t1.gens) or set(id_map.values()) != set(t2.gens) or len(set(id_map.values())) != len(id_map):
        raise ValueError("id_map must be a bijection between the generator sets")
    for a, b in id_map.items():
        if a.parity != b.parity:
            raise ParityViolation(f"{a} -> {b} changes parity")


def compare_tables(
    t1: BracketTable,
    t2: BracketTable,
    id_map: Mapping[Generator, Generator] | None = None,
    mode: str = "exact",
) -> MatchReport:
    """Compare two tables through a generator bijection.

    In ``up_to_diagonal_rescaling`` mode nonzero scales ``s_g`` are sought with
    ``C1[a,b->c] = C2[a,b->c] * s_a * s_b / s_c`` (t2's generators rescaled by s).
    """
    if id_map is None:
        id_map = {g: t2.gen(g.name, *g.labels) for g in t1.gens}
    _check_bijection(t1, t2, id_map)
    eqs = list(_structure_equations(t1, t2, id_map))
    if mode == "exact":
        mism = [
            (str(a), str(b), str(c), v1.render(), v2.render()) for a, b, c, v1, v2 in eqs if v1 != v2
        ]
        return MatchReport(not mism, mode, {}, mism)
    if mode != "up_to_diagonal_rescaling":
        raise ValueError(f"unknown comparison mode {mode!r}")

    mism = []
    ratios = []
    for a, b, c, v1, v2 in eqs:
        if v1.is_zero() or v2.is_zero():
            mism.append((str(a), str(b), str(c), v1.render(), v2.render()))
            continue
        x1, x2 = v1.constant_value(), v2.constant_value()
        if x1 is None or x2 is None:
            raise ValueError("rescaling comparison needs parameter-free constants")
        ratios.append((a, b, c, x1 / x2))
    scales = _solve_scales(t1, ratios)
    for a, b, c, r in ratios:
        if scales[a] * scales[b] / scales[c] != r:
            v2 = t2.bracket_gens(id_map[a], id_map[b]).coeff(id_map[c]).constant_value()
            got = v2 * scales[a] * scales[b] / scales[c]
            mism.append((str(a), str(b), str(c), (v2 * r).render(), got.render()))
    mism.sort()
    return MatchReport(not mism, mode, {str(g): s.render() for g, s in scales.items()}, mism)


def _solve_scales(t1: BracketTable, ratios) -> dict:
    """Ratio-consistency propagation; one seed per unconstrained component."""
    known: dict[Generator, BaseNumber] = {}
    pending = list(ratios)
    seed_order = sorted(t1.gens, key=lambda g: (not g.odd, t1.index[g]))

    def exponents(a, b, c):
        e: dict = {}
        for g, k in ((a, 1), (b, 1), (c, -1)):
            e[g] = e.get(g, 0) + k
        return {g: k for g, k in e.items() if k}

    while True:
        progress = True
        while progress:
            progress = False
            rest = []
            sq = []
            for eq in pending:
                a, b, c, r = eq
                e = exponents(a, b, c)
                unknown = [g for g in e if g not in known]
                if not unknown:
                    continue
                if len(unknown) == 1:
                    x = unknown[0]
                    val = r
                    for g, k in e.items():
                        if g != x:
                            val = val / known[g] ** k
                    k = e[x]
                    if k == 1:
                        known[x] = val
                        progress = True
                        continue
                    if k == -1:
                        known[x] = val.inverse()
                        progress = True
                        continue
                    sq.append((x, k, val))
                rest.append(eq)
            pending = rest
            if not progress:
                for x, k, val in sq:
                    if x in known:
                        continue
                    root = val.sqrt() if k == 2 else (val.inverse().sqrt() if k == -2 else None)
                    if root is not None:
                        known[x] = root
                        progress = True
                        break
        todo = [g for g in seed_order if g not in known and any(g in (a, b, c) for a, b, c, _ in pending)]
        if not todo:
            break
        known[todo[0]] = BaseNumber(1)
    for g in t1.gens:
        known.setdefault(g, BaseNumber(1))
    return known


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

_HEADER = "# supergca bracket table v1"


def _gen_json(g: Generator) -> str:
    return json.dumps(
        {
            "name": g.name,
            "labels": list(g.labels),
            "parity": "odd" if g.odd else "even",
            "weight": None if g.weight is None else str(g.weight),
        },
        sort_keys=True,
    )


def dumps(t: BracketTable) -> str:
    """Line-oriented serialization: JSON header/generator lines, text bracket lines."""
    meta = {k: v for k, v in t.meta.items() if _jsonable(v)}
    lines = [_HEADER, "meta " + json.dumps(meta, sort_keys=True)]
    lines += ["gen " + _gen_json(g) for g in t.gens]
    for (i, j), e in t.entries():
        rhs = LinComb({t.gens[k]: c for k, c in e.items()}).render(t.index)
        lines.append(f"({t.gens[i]}, {t.gens[j]}) -> {rhs}")
    return "\n".join(lines) + "\n"


def _jsonable(v) -> bool:
    try:
        json.dumps(v)
        return True
    except TypeError:
        return False


_GEN_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\[([0-9,\-]*)\])?$")


def _parse_gen_token(tok: str) -> Generator:
    m = _GEN_TOKEN.match(tok.strip())
    if not m:
        raise ValueError(f"bad generator token {tok!r}")
    labels = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
    return Generator(m.group(1), labels)


def _split_terms(text: str) -> list[tuple[int, str]]:
    terms, depth, start, sign = [], 0, 0, 1
    text = text.strip()
    if text.startswith("-"):
        sign, text = -1, text[1:]
    k = 0
    while k < len(text):
        ch = text[k]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith((" + ", " - "), k):
            terms.append((sign, text[start:k]))
            sign = 1 if text[k + 1] == "+" else -1
            start = k + 3
            k += 3
            continue
        k += 1
    terms.append((sign, text[start:]))
    return terms


def parse_lincomb(text: str, gens: Mapping[Generator, Generator] | None = None) -> LinComb:
    text = text.strip()
    if text == "0":
        return LinComb()
    out = LinComb()
    for sign, term in _split_terms(text):
        if "*" in term:
            coef_txt, gen_txt = term.rsplit("*", 1)
            coef = Scalar.parse(coef_txt)
        else:
            coef, gen_txt = Scalar.const(1), term
        g = _parse_gen_token(gen_txt)
        if gens is not None:
            g = gens[g]
        out = out + LinComb.of(g, coef * sign)
    return out


def loads(text: str) -> BracketTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != _HEADER:
        raise ValueError("missing table header")
    meta: dict = {}
    gens: list[Generator] = []
    pairs = []
    for ln in lines[1:]:
        if ln.startswith("meta "):
            meta = json.loads(ln[5:])
        elif ln.startswith("gen "):
            d = json.loads(ln[4:])
            w = None if d["weight"] is None else Fraction(d["weight"])
            gens.append(Generator(d["name"], tuple(d["labels"]), ODD if d["parity"] == "odd" else EVEN, w))
        else:
            lhs, rhs = ln.split(" -> ", 1)
            a_txt, b_txt = lhs.strip()[1:-1].split(", ")
            pairs.append((a_txt, b_txt, rhs))
    t = BracketTable(gens, meta=meta)
    lookup = {g: g for g in gens}
    for a_txt, b_txt, rhs in pairs:
        a, b = lookup[_parse_gen_token(a_txt)], lookup[_parse_gen_token(b_txt)]
        t._store(a, b, parse_lincomb(rhs, lookup))
    return t
