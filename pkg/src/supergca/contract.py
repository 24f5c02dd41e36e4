"""Inonu-Wigner contractions as Laurent limits in u = c^(1/2), plus the named pipelines."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import DivergentLimit, Scalar
from .salg import (
    BracketTable,
    Generator,
    LinComb,
    SplitSpec,
    backward_map,
    change_basis,
    check_graded_jacobi,
    check_split_structure,
    compare_tables,
    dimension_report,
    direct_sum,
)

__all__ = [
    "PIPELINES",
    "ContractionOutcome",
    "ContractionSpec",
    "MissingWeight",
    "PipelineResult",
    "UnknownPipeline",
    "assign_weights",
    "contract_limit",
    "rescale_table",
    "run_named_contraction",
    "scale_invariance",
]


class MissingWeight(KeyError):
    pass


class UnknownPipeline(KeyError):
    pass


@dataclass
class ContractionSpec:
    """Weights w in the convention bold X = c^w X (c-units; halves allowed)."""

    weights: dict[Generator, Fraction]
    variable: str = "c"
    label: str = ""

    def u_weight(self, g: Generator) -> int:
        try:
            w = Fraction(self.weights[g]) * 2
        except KeyError:
            raise MissingWeight(str(g)) from None
        if w.denominator != 1:
            raise ValueError(f"weight of {g} is not a multiple of 1/2")
        return int(w)

    def negated(self) -> ContractionSpec:
        return ContractionSpec({g: -Fraction(w) for g, w in self.weights.items()}, self.variable, f"-({self.label})")


def rescale_table(t: BracketTable, spec: ContractionSpec) -> BracketTable:
    """Constant C of [a, b} -> g becomes C * u^(2(w_a + w_b - w_g))."""
    missing = [str(g) for g in t.gens if g not in spec.weights]
    if missing:
        raise MissingWeight(", ".join(missing))
    uw = [spec.u_weight(g) for g in t.gens]
    out = BracketTable(t.gens, meta={**t.meta, "rescaled": spec.label})
    for (i, j), e in t._entries.items():
        out._entries[(i, j)] = {k: c.times_upow(uw[i] + uw[j] - uw[k]) for k, c in e.items()}
    return out


@dataclass
class ContractionOutcome:
    table: BracketTable | None
    dropped: list = field(default_factory=list)  # (a, b, g, u-power)
    valid: bool = True
    offenders: list = field(default_factory=list)  # (a, b, g, divergent terms)


def contract_limit(t_param: BracketTable) -> ContractionOutcome:
    """Keep u^0 terms; log dropped negative powers; positive powers make the outcome invalid."""
    if t_param.params():
        raise ValueError("contract_limit expects a table parametric in u only")
    out = BracketTable(t_param.gens, meta={**t_param.meta, "contracted": True})
    dropped, offenders = [], []
    gens = t_param.gens
    for (i, j), e in sorted(t_param._entries.items()):
        kept = {}
        for k, c in sorted(e.items()):
            try:
                v = c.limit_at_infinity()
            except DivergentLimit as exc:
                offenders.append((str(gens[i]), str(gens[j]), str(gens[k]), ", ".join(exc.offenders)))
                continue
            for p in sorted(c.u_powers()):
                if p < 0:
                    dropped.append((str(gens[i]), str(gens[j]), str(gens[k]), p))
            if not v.is_zero():
                kept[k] = v
        if kept:
            out._entries[(i, j)] = kept
    if offenders:
        return ContractionOutcome(None, dropped, False, offenders)
    return ContractionOutcome(out, dropped, True, [])


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

H_ = Fraction(1, 2)

# su(2,2|2N) Weyl-basis generator -> weight, keyed by (family, kind)
_PHYSICAL = {
    "Qp": H_,
    "Qm": -H_,
    "Sp": -H_,
    "Sm": -3 * H_,
    "P0": Fraction(1),
    "Pi": Fraction(0),
    "Mij": Fraction(0),
    "M0i": Fraction(-1),
    "D": Fraction(0),
    "K0": Fraction(-1),
    "Ki": Fraction(-2),
    "A": Fraction(-1),
    "Tp": Fraction(0),
    "Tm": Fraction(-1),
}
# symmetry rescaling P' = lam P, K' = K/lam, Q' = lam^(1/2) Q, S' = lam^(-1/2) S, as weights at lam = c
_SYMMETRY = {"Qp": -H_, "Qm": -H_, "Sp": H_, "Sm": H_, "P0": -1, "Pi": -1, "K0": 1, "Ki": 1}


def _kind(g: Generator) -> str:
    if g.name in ("P", "K"):
        return g.name + ("0" if g.labels[0] == 0 else "i")
    if g.name == "M":
        return "M0i" if g.labels[0] == 0 else "Mij"
    return g.name


def _su22_weights(gens, composed: bool) -> dict:
    out = {}
    for g in gens:
        k = _kind(g)
        w = _PHYSICAL[k]
        if composed:
            w = w + Fraction(_SYMMETRY.get(k, 0))
        out[g] = w
    return out


def _source(name: str):
    """(source table in the basis the weights refer to, extra context)."""
    from .catalog.osp import build_osp_n2
    from .catalog.su22 import build_su22_2N, su22_weyl

    if name in ("physical-n1", "physical-n2", "composed-n1", "composed-n2"):
        N = int(name[-1])
        t, w = su22_weyl(N)
        return t, {"N": N, "weyl": w}
    if name == "bosonic-o42":
        t = build_su22_2N(1).table
        return t.subtable([g for g in t.gens if g.name in ("P", "K", "M", "D")]), {}
    if name == "d1-diagonal":
        osp = build_osp_n2(1).table
        return _diagonal_basis(direct_sum(osp, osp)), {}
    raise UnknownPipeline(name)


def assign_weights(name: str, gens=None) -> ContractionSpec:
    if name not in PIPELINES:
        raise UnknownPipeline(name)
    if gens is None:
        gens = _source(name)[0].gens
    if name.startswith("physical") or name == "bosonic-o42":
        return ContractionSpec(_su22_weights(gens, False), label="physical")
    if name.startswith("composed"):
        return ContractionSpec(_su22_weights(gens, True), label="composed lambda=c")
    # d1-diagonal: coset contraction, diagonal weight 0, antidiagonal -1
    return ContractionSpec({g: Fraction(-1 if g.name in ("Qm", "A") else 0) for g in gens}, label="coset")


# ---------------------------------------------------------------------------
# d = 1 diagonal basis
# ---------------------------------------------------------------------------


def _diagonal_basis(t: BracketTable) -> BracketTable:
    """osp(1|2)_L + osp(1|2)_R -> diagonal (Qp, R) and antidiagonal (Qm, A).

    With every summand generator rescaled by sqrt2, (g_L +- g_R)/sqrt2 become
    Qp = Q_L + Q_R, R = R_L + R_R, A = R_L - R_R and Qm = (Q_L - Q_R)/2; the
    relative 1/2 of Qm is the normalization in which the contracted
    {Qp_a, Qm_b} equals 1 * A_ab.
    """
    from .catalog._util import Family
    from .catalog.d21 import S2

    Qp, Qm = Family("Qp", [S2], odd=True), Family("Qm", [S2], odd=True)
    R, A = Family("R", [S2, S2], sym=[(0, 1)]), Family("A", [S2, S2], sym=[(0, 1)])
    fwd = {}
    half = Scalar.const(Fraction(1, 2))
    for g in Qp:
        (a,) = g.labels
        fwd[g] = LinComb.of(Generator("Qp_L", (a, 1), 1)) + LinComb.of(Generator("Qp_R", (a, 1), 1))
    for g in Qm:
        (a,) = g.labels
        fwd[g] = (LinComb.of(Generator("Qp_L", (a, 1), 1)) - LinComb.of(Generator("Qp_R", (a, 1), 1))).scale(half)
    for fam, sign in ((R, 1), (A, -1)):
        for g in fam:
            fwd[g] = LinComb.of(Generator("R_L", g.labels)) + LinComb.of(Generator("R_R", g.labels)).scale(Scalar.const(sign))
    new_gens = [*Qp, *R, *Qm, *A]
    return change_basis(t, backward_map(t.gens, new_gens, fwd), new_gens, meta={"family": "osp12_LR_diagonal"})


# ---------------------------------------------------------------------------
# pipelines
# ---------------------------------------------------------------------------

PIPELINES = {
    "bosonic-o42": "o(4,2) with the physical weights of P0 = H/c, M_i0 = c B_i, K0 = c K, K_i = c^2 F_i",
    "composed-n1": "su(2,2|2), physical rescaling composed with the symmetry rescaling at lambda = c",
    "composed-n2": "su(2,2|4), physical rescaling composed with the symmetry rescaling at lambda = c",
    "d1-diagonal": "osp(1|2) + osp(1|2), diagonal kept, antidiagonal contracted",
    "physical-n1": "su(2,2|2), physical rescaling of supercharges and o(4,2) generators",
    "physical-n2": "su(2,2|4), physical rescaling of supercharges and o(4,2) generators",
}


@dataclass
class PipelineResult:
    name: str
    outcome: ContractionOutcome
    checks: list = field(default_factory=list)  # (name, ok, detail)
    deviations: list = field(default_factory=list)  # {computed, printed_value, citation, note}
    renamed: BracketTable | None = None

    @property
    def ok(self) -> bool:
        return self.outcome.valid and all(c[1] for c in self.checks)


def physical_names(t: BracketTable) -> BracketTable:
    """Rename a contracted su(2,2|2N) table to H, K, D, J, P, B, F, A0, Tp, Tm.

    M_{i0} = c B_i, so the bold boost is B_i = -(contracted M[0,i]).
    """
    from .catalog.golden import golden_gen

    m, new = {}, []
    for g in t.gens:
        k = _kind(g)
        coef = 1
        if k == "P0":
            h = golden_gen("H")
        elif k == "K0":
            h = golden_gen("K")
        elif k == "Ki":
            h = golden_gen("F", g.labels[0])
        elif k == "Mij":
            h = golden_gen("J", *g.labels)
        elif k == "M0i":
            h, coef = golden_gen("B", g.labels[1]), -1
        elif k == "A":
            h = golden_gen("A0")
        else:
            h = Generator(g.name, g.labels, g.parity)
        m[g] = LinComb.of(h, coef)
        new.append(h)
    return change_basis(t, m, new, meta={**t.meta, "names": "physical"})


def _split_report(t: BracketTable, plus: set, mode: str):
    s = SplitSpec.by_names(t, plus)
    return check_split_structure(t, s, mode)


def _structure_checks(res: PipelineResult, t: BracketTable, plus: set) -> None:
    jac = check_graded_jacobi(t)
    res.checks.append(("jacobi", not jac, f"{len(jac)} nonzero residuals"))
    for mode in ("semidirect", "graded_abelian_minus"):
        r = _split_report(t, plus, mode)
        res.checks.append((mode, r.ok, f"{len(r.violations)} violations"))


GPLUS = {"Qp", "Sp", "H", "K", "D", "J", "Tp"}


def run_named_contraction(name: str, jobs: int = 1) -> PipelineResult:
    if name not in PIPELINES:
        raise UnknownPipeline(name)
    src, ctx = _source(name)
    spec = assign_weights(name, src.gens)
    out = contract_limit(rescale_table(src, spec))
    res = PipelineResult(name, out)
    if not out.valid:
        res.checks.append(("valid", False, f"{len(out.offenders)} divergent constants"))
        return res
    res.checks.append(("valid", True, f"{len(out.dropped)} dropped terms"))
    same_dim = dimension_report(out.table).as_tuple() == dimension_report(src).as_tuple()
    res.checks.append(("dimension", same_dim, str(dimension_report(out.table).as_tuple())))
    if name == "d1-diagonal":
        from .catalog.osp import build_osp12_extended

        t = out.table
        _structure_checks(res, t, {"Qp", "R"})
        gold = build_osp12_extended(beta=1).table
        m = compare_tables(t, gold, None, "exact")
        res.checks.append(("golden_exact", m.ok, f"{len(m.mismatches)} mismatches"))
        res.renamed = t
        return res
    if name == "bosonic-o42":
        from .catalog.gca import build_gca
        from .catalog.golden import gca3_dictionary

        t = physical_names(out.table)
        _structure_checks(res, t, {"H", "K", "D", "J"})
        g3 = build_gca(3).table
        mapped = change_basis(t, gca3_dictionary(), g3.gens)
        m = compare_tables(mapped, g3, None, "exact")
        res.checks.append(("gca3_exact", m.ok, f"{len(m.mismatches)} mismatches"))
        res.renamed = t
        return res
    # su(2,2|2N) pipelines
    from .catalog.golden import (
        build_expected_gca3_susy,
        build_n1_dictionary,
        internal_checks,
        tminus_dimension,
    )

    N = ctx["N"]
    t = physical_names(out.table)
    res.renamed = t
    _structure_checks(res, t, GPLUS)
    res.checks.extend((f"source_{n}", ok, d) for n, ok, d in internal_checks(src, N, contracted=False))
    res.checks.extend(internal_checks(t, N, contracted=True))
    dims = tminus_dimension(N)
    if dims["computed"] != dims["printed"]:
        res.deviations.append(
            {
                "computed": f"dim span(T-) = {dims['computed']}",
                "printed_value": str(dims["printed"]),
                "citation": "internal coset of dimension N(2N-1)",
                "note": "traceless T: the Omega-symmetric part has 2N^2 - N - 1 independent components",
            }
        )
    if N == 1:
        from .catalog.d21 import build_d21_extended

        d21 = build_d21_extended(1, beta=1, gamma=1).table
        m = compare_tables(build_n1_dictionary().pull_back(t), d21, None, "up_to_diagonal_rescaling")
        res.checks.append(("d21_dictionary_rescaled", m.ok, f"{len(m.mismatches)} mismatches against extended D(2,1;1)"))
    if name.startswith("composed"):
        gold = build_expected_gca3_susy(N)
        m = compare_tables(t, gold.table, None, "up_to_diagonal_rescaling")
        res.checks.append(("golden_rescaled", m.ok, f"{len(m.mismatches)} mismatches"))
        plus = [g for g in t.gens if g.name in GPLUS]
        src_plus = physical_names(src).subtable(plus)
        mp = compare_tables(t.subtable(plus), src_plus, None, "exact")
        res.checks.append(("plus_sector_exact", mp.ok, f"{len(mp.mismatches)} mismatches"))
        res.deviations.extend(gold.deviations)
    return res


def scale_invariance(name: str, lam: int = 4) -> tuple[bool, str]:
    """Pipeline output is unchanged (up to diagonal rescaling) when the source is first
    rescaled by the symmetry P -> lam P, K -> K/lam, Q -> lam^(1/2) Q, S -> lam^(-1/2) S."""
    if not name.startswith(("physical", "composed")):
        raise UnknownPipeline(f"{name} has no su(2,2|2N) source")
    src, _ctx = _source(name)
    root = Fraction(lam) ** Fraction(1, 2)
    r = int(round(float(root)))
    if r * r != lam:
        raise ValueError("lam must be a perfect square")
    factor = {"Qp": Fraction(r), "Qm": Fraction(r), "Sp": Fraction(1, r), "Sm": Fraction(1, r), "P": Fraction(lam), "K": Fraction(1, lam)}
    # new generator X' = f X, so old X = X'/f
    m = {g: LinComb.of(g, Scalar.const(1 / factor.get(g.name, Fraction(1)))) for g in src.gens}
    moved = change_basis(src, m, src.gens)
    auto = compare_tables(moved, src, None, "exact")
    spec = assign_weights(name, src.gens)
    a = contract_limit(rescale_table(src, spec)).table
    b = contract_limit(rescale_table(moved, spec)).table
    rep = compare_tables(a, b, None, "up_to_diagonal_rescaling")
    return auto.ok and rep.ok, f"automorphism exact: {auto.ok}; contracted tables match: {rep.ok}"


def spec_from_mapping(weights: Mapping[Generator, object], label: str = "") -> ContractionSpec:
    return ContractionSpec({g: Fraction(w) for g, w in weights.items()}, label=label)
