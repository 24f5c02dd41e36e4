"""Polynomial constraints on table parameters extracted from Jacobi residuals, and a tiny solver."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from math import lcm

from .exactmath import BaseNumber, Scalar, as_scalar
from .salg import BracketTable, check_graded_jacobi

__all__ = [
    "ConstraintSystem",
    "Equation",
    "MissingAssignment",
    "Solutions",
    "Undetermined",
    "residual_system",
    "solve_small",
    "verify_assignment",
]


class MissingAssignment(KeyError):
    pass


def _degree(mono) -> int:
    return sum(e for _n, e in mono)


def _leading_key(s: Scalar):
    return max(s.terms, key=lambda key: (_degree(key[0]), key[0]))


def normalize(eq: Scalar) -> Scalar:
    """Monic in the leading monomial (highest degree, then name order), denominators cleared."""
    if eq.is_zero():
        return eq
    lead = eq.terms[_leading_key(eq)]
    eq = eq * Scalar.const(lead.inverse())
    dens = [int(c.denominator) for coef in eq.terms.values() for c in coef.c]
    m = lcm(*dens) if dens else 1
    return eq * m if m != 1 else eq


@dataclass
class Equation:
    poly: Scalar
    provenance: list = field(default_factory=list)  # [(gen, gen, gen, target)]

    def render(self) -> str:
        return f"{self.poly.render()} = 0"


@dataclass
class ConstraintSystem:
    equations: list[Equation] = field(default_factory=list)
    source: BracketTable | None = field(default=None, repr=False, compare=False)

    def params(self) -> set[str]:
        out = set()
        for e in self.equations:
            out |= e.poly.params()
        return out

    def polys(self) -> list[Scalar]:
        return [e.poly for e in self.equations]

    def __len__(self) -> int:
        return len(self.equations)

    def __iter__(self):
        return iter(self.equations)

    @classmethod
    def from_polys(cls, polys, source: BracketTable | None = None) -> ConstraintSystem:
        seen: dict[Scalar, Equation] = {}
        for p in polys:
            p = normalize(as_scalar(p))
            if p.is_zero():
                continue
            seen.setdefault(p, Equation(p))
        return cls(_sorted(seen.values()), source)

    def as_json(self) -> list[dict]:
        return [
            {"equation": e.render(), "provenance": [list(p) for p in e.provenance[:3]], "count": len(e.provenance)}
            for e in self.equations
        ]


def _sorted(eqs) -> list[Equation]:
    return sorted(eqs, key=lambda e: (len(e.poly.terms), e.poly.render()))


def residual_system(t: BracketTable, jobs: int = 1) -> ConstraintSystem:
    """Every generator coefficient of every nonzero Jacobi residual, as one equation."""
    if t.u_powers() - {0}:
        raise ValueError("residual_system expects a table without contraction powers")
    seen: dict[Scalar, Equation] = {}
    for (a, b, c), lc in check_graded_jacobi(t, jobs=jobs):
        for g, coef in lc:
            p = normalize(coef)
            eq = seen.get(p)
            if eq is None:
                eq = seen[p] = Equation(p)
            eq.provenance.append((str(a), str(b), str(c), str(g)))
    return ConstraintSystem(_sorted(seen.values()), t)


def verify_assignment(s: ConstraintSystem, a: Mapping) -> bool:
    missing = s.params() - set(a)
    if missing:
        raise MissingAssignment(sorted(missing))
    return all(e.poly.substitute(a).is_zero() for e in s.equations)


@dataclass
class Solutions:
    solutions: list[dict[str, BaseNumber]]
    verified: bool | None = None

    def __bool__(self) -> bool:
        return bool(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def rendered(self) -> list[dict[str, str]]:
        return [{k: v.render() for k, v in sorted(s.items())} for s in self.solutions]


@dataclass
class Undetermined:
    system: list[Scalar]
    reason: str

    def __bool__(self) -> bool:
        return False


def _linear_in(p: Scalar, x: str):
    """If p = c*x + r with constant c and x absent from r, return (c, r)."""
    c = None
    rest = {}
    for key, coef in p.terms.items():
        mono, k = key
        e = dict(mono).get(x, 0)
        if e == 0:
            rest[key] = coef
        elif e == 1 and len(mono) == 1:
            c = coef
        else:
            return None
    if c is None:
        return None
    return c, Scalar(rest)


def _univariate_roots(p: Scalar, x: str) -> list[BaseNumber] | None:
    coefs = {0: BaseNumber(0), 1: BaseNumber(0), 2: BaseNumber(0)}
    for (mono, _k), c in p.terms.items():
        e = dict(mono).get(x, 0)
        if e > 2:
            return None
        coefs[e] = coefs[e] + c
    a, b, c = coefs[2], coefs[1], coefs[0]
    if a.is_zero():
        return [-c / b] if not b.is_zero() else None
    disc = b * b - a * c * 4
    r = disc.sqrt()
    if r is None:
        return None
    roots = [(-b + r) / (a * 2), (-b - r) / (a * 2)]
    return roots if roots[0] != roots[1] else roots[:1]


def _solve(polys: list[Scalar], fixed: dict[str, Scalar]) -> list[dict[str, Scalar]] | Undetermined:
    polys = [p for p in polys if not p.is_zero()]
    # linear elimination
    while True:
        if any(not p.params() for p in polys):
            return []  # nonzero constant: inconsistent branch
        hit = None
        for p in sorted(polys, key=lambda q: (len(q.terms), q.render())):
            for x in sorted(p.params()):
                lin = _linear_in(p, x)
                if lin is not None:
                    hit = (x, -lin[1] * Scalar.const(lin[0].inverse()))
                    break
            if hit:
                break
        if hit is None:
            break
        x, val = hit
        fixed = {k: v.substitute({x: val}) for k, v in fixed.items()}
        fixed[x] = val
        polys = [q for q in (p.substitute({x: val}) for p in polys) if not q.is_zero()]
    if not polys:
        return [fixed]
    for p in sorted(polys, key=lambda q: (len(q.terms), q.render())):
        ps = p.params()
        if len(ps) == 1:
            (x,) = ps
            roots = _univariate_roots(p, x)
            if roots is None:
                continue
            out = []
            for r in roots:
                sub = _solve([q.substitute({x: r}) for q in polys], {**{k: v.substitute({x: r}) for k, v in fixed.items()}, x: Scalar.const(r)})
                if isinstance(sub, Undetermined):
                    return sub
                out.extend(sub)
            return out
    return Undetermined(polys, "no linear or univariate quadratic equation left")


def solve_small(s: ConstraintSystem, check: bool = True) -> Solutions | Undetermined:
    """All solutions of a linear-plus-univariate-quadratic system over Q(i, sqrt2).

    With ``check`` and a known source table, every solution is substituted back
    and the table's Jacobi identities are re-checked.
    """
    params = s.params()
    if len(params) > 3:
        return Undetermined(s.polys(), "more than three parameters")
    res = _solve(s.polys(), {})
    if isinstance(res, Undetermined):
        return res
    sols = []
    for sol in res:
        free = params - set(sol)
        if free or any(v.params() for v in sol.values()):
            return Undetermined(s.polys(), f"positive-dimensional solution set (free: {sorted(free)})")
        sols.append({k: v.constant_value() for k, v in sorted(sol.items())})
    uniq = []
    for sol in sols:
        if sol not in uniq:
            uniq.append(sol)
    uniq.sort(key=lambda d: [(k, v.render()) for k, v in d.items()])
    out = Solutions(uniq)
    if check and s.source is not None:
        out.verified = all(not check_graded_jacobi(s.source.substitute(sol)) for sol in uniq)
    return out
