"""d=1 and d=2 cases: osp(n|2), extended osp(1|2), extended su(1,1|1) + u(1)."""

from __future__ import annotations

from ..exactmath import as_scalar, param
from ..salg import LinComb, SplitSpec, StarStructure, TableBuilder
from ._util import HALF, AlgebraCase, Family, I, eps, lsum
from .d21 import S2, sl2_bracket, spin_act


def _sl2_on(b: TableBuilder, R: Family, fam: Family, slots=(0,)) -> None:
    """R acts on the listed spinor slots of ``fam`` by -i eps_{c(a} X_{b)}."""
    for g in R:
        i, j = g.labels
        for h in fam:
            labs = list(h.labels)
            out = []
            for pos in slots:
                for c, new in spin_act(i, j, labs[pos]):
                    nl = list(labs)
                    nl[pos] = new
                    out.append(fam(*nl, coef=c))
            b.set(g, h, lsum(out))


def _zero(b: TableBuilder, *pairs) -> None:
    for f1, f2 in pairs:
        for g in f1:
            for h in f2:
                b.set(g, h, LinComb())


def build_osp_n2(n: int) -> AlgebraCase:
    """osp(n|2): sp(2) + so(n) with 2n real supercharges Qp[a,k]."""
    if n < 0:
        raise ValueError("n must be >= 0")
    R = Family("R", [S2, S2], sym=[(0, 1)])
    T = Family("T", [range(1, n + 1)] * 2, anti=[(0, 1)])
    Q = Family("Qp", [S2, range(1, n + 1)], odd=True)
    b = TableBuilder([*Q, *R, *T], meta={"family": "osp_n2", "n": n})
    for g in R:
        for h in R:
            b.set(g, h, sl2_bracket(R, *g.labels, *h.labels))
    for g in T:
        i, j = g.labels
        for h in T:
            k, l = h.labels
            b.set(
                g,
                h,
                lsum(
                    [
                        T(j, l, coef=I * (i == k)),
                        T(i, k, coef=I * (j == l)),
                        T(j, k, coef=-I * (i == l)),
                        T(i, l, coef=-I * (j == k)),
                    ]
                ),
            )
        for h in Q:
            a, k = h.labels
            b.set(g, h, lsum([Q(a, j, coef=I * (i == k)), Q(a, i, coef=-I * (j == k))]))
    _sl2_on(b, R, Q)
    _zero(b, (R, T))
    for g in Q:
        a, i = g.labels
        for h in Q:
            c, j = h.labels
            b.set(g, h, lsum([R(a, c, coef=2 * (i == j)), T(i, j, coef=-eps(a, c))]))
    t = b.build()
    star = StarStructure({g: LinComb.of(g) for g in t.gens})
    return AlgebraCase(id=f"ospN2-{n}", family="osp_n2", table=t, params={"n": n}, star=star)


def build_osp12_extended(beta=None) -> AlgebraCase:
    be = param("beta") if beta is None else as_scalar(beta)
    Qp = Family("Qp", [S2], odd=True)
    R = Family("R", [S2, S2], sym=[(0, 1)])
    Qm = Family("Qm", [S2], odd=True)
    A = Family("A", [S2, S2], sym=[(0, 1)])
    b = TableBuilder([*Qp, *R, *Qm, *A], meta={"family": "osp12_ext"})
    for g in R:
        for h in R:
            b.set(g, h, sl2_bracket(R, *g.labels, *h.labels))
    _sl2_on(b, R, Qp)
    _sl2_on(b, R, Qm)
    _sl2_on(b, R, A, slots=(0, 1))
    for g in Qp:
        (a,) = g.labels
        for h in Qp:
            b.set(g, h, R(a, *h.labels, coef=2))
        for h in Qm:
            b.set(g, h, A(a, *h.labels, coef=be))
        # [Qp_a, A_bc] = 2i eps_{a(b} Qm_{c)}
        for h in A:
            bb, c = h.labels
            b.set(g, h, lsum([Qm(c, coef=I * eps(a, bb)), Qm(bb, coef=I * eps(a, c))]))
    _zero(b, (Qm, Qm), (Qm, A), (A, A))
    t = b.build()
    star = StarStructure({g: LinComb.of(g) for g in t.gens})
    s = SplitSpec.by_names(t, {"Qp", "R"})
    return AlgebraCase(
        id="osp12-ext",
        family="osp12_ext",
        table=t,
        params={} if beta is None else {"beta": be.render()},
        star=star,
        splits=[("semidirect", s, "semidirect"), ("graded_abelian_minus", s, "graded_abelian_minus")],
        expected={"solution": {"beta": "1"}},
        notes=["{Qp_a, Qm_b} = beta*A_ab (second index of the left side read as b)"],
    )


def build_su111_extended(beta=None, gamma=None, verbatim: bool = False) -> AlgebraCase:
    """su(1,1|1) + u(1) with its graded abelian enlargement.

    By default J enters {Qp_a, Qpb_b} as -2 eps_ab J, the sign for which the
    u(1) charges [J, Qp] = -(i/2) Qp close the base superalgebra; ``verbatim``
    keeps +2 eps_ab J (the base then fails its (Qp, Qp, Qpb) identities).
    """
    be = param("beta") if beta is None else as_scalar(beta)
    ga = param("gamma") if gamma is None else as_scalar(gamma)
    Qp = Family("Qp", [S2], odd=True)
    Qpb = Family("Qpb", [S2], odd=True)
    R = Family("R", [S2, S2], sym=[(0, 1)])
    J = Family("J", [])
    C = Family("C", [])
    Qm = Family("Qm", [S2], odd=True)
    Qmb = Family("Qmb", [S2], odd=True)
    A = Family("A", [S2, S2], sym=[(0, 1)])
    Ab = Family("Ab", [S2, S2], sym=[(0, 1)])
    plus = [Qp, Qpb, R, J, C]
    minus = [Qm, Qmb, A, Ab]
    b = TableBuilder([g for f in plus + minus for g in f], meta={"family": "su111_ext"})
    (Jg,), (Cg,) = list(J), list(C)
    sj = 1 if verbatim else -1
    for g in R:
        for h in R:
            b.set(g, h, sl2_bracket(R, *g.labels, *h.labels))
    for fam in (Qp, Qpb, Qm, Qmb):
        _sl2_on(b, R, fam)
    for fam in (A, Ab):
        _sl2_on(b, R, fam, slots=(0, 1))
    # u(1) charges: J on (Qp, Qpb, Qm, Qmb, A, Ab), C on the minus sector only
    jq = {"Qp": -HALF, "Qpb": HALF, "Qm": -HALF, "Qmb": HALF, "A": -1, "Ab": 1}
    cq = {"Qp": 0, "Qpb": 0, "Qm": -ga, "Qmb": ga, "A": -ga, "Ab": ga}
    for fam in (Qp, Qpb, Qm, Qmb, A, Ab):
        for h in fam:
            b.set(Jg, h, LinComb.of(h, I * as_scalar(jq[fam.name])))
            b.set(Cg, h, LinComb.of(h, I * as_scalar(cq[fam.name])))
    _zero(b, (R, J), (R, C), (J, C))
    for g in Qp:
        (a,) = g.labels
        for h in Qpb:
            (c,) = h.labels
            b.set(g, h, lsum([R(a, c, coef=2), J(coef=2 * sj * eps(a, c)), C(coef=2 * eps(a, c))]))
        for h in Qp:
            b.set(g, h, LinComb())
        for h in Qm:
            b.set(g, h, A(a, *h.labels, coef=2 * be))
        for h in Qmb:
            b.set(g, h, LinComb())
        for h in Ab:
            bb, c = h.labels
            b.set(g, h, lsum([Qmb(c, coef=-I * eps(a, bb)), Qmb(bb, coef=-I * eps(a, c))]))
        for h in A:
            b.set(g, h, LinComb())
    for g in Qpb:
        (a,) = g.labels
        for h in Qpb:
            b.set(g, h, LinComb())
        for h in Qmb:
            b.set(g, h, Ab(a, *h.labels, coef=2 * be))
        for h in Qm:
            b.set(g, h, LinComb())
        for h in A:
            bb, c = h.labels
            b.set(g, h, lsum([Qm(c, coef=-I * eps(a, bb)), Qm(bb, coef=-I * eps(a, c))]))
        for h in Ab:
            b.set(g, h, LinComb())
    for f1 in minus:
        for f2 in minus:
            _zero(b, (f1, f2))
    t = b.build()
    images = {}
    for f1, f2 in ((Qp, Qpb), (Qm, Qmb), (A, Ab)):
        for g in f1:
            h = f2(*g.labels)
            images[g] = h
            images[next(iter(h.terms))] = LinComb.of(g)
    for g in R:
        images[g] = LinComb.of(g)
    images[Jg] = LinComb.of(Jg, -1)
    images[Cg] = LinComb.of(Cg, -1)
    s = SplitSpec.by_names(t, {"Qp", "Qpb", "R", "J", "C"})
    assigned = {}
    if beta is not None:
        assigned["beta"] = be.render()
    if gamma is not None:
        assigned["gamma"] = ga.render()
    return AlgebraCase(
        id="su111-ext",
        family="su111_ext",
        table=t,
        params=assigned,
        star=StarStructure(images),
        splits=[("semidirect", s, "semidirect"), ("graded_abelian_minus", s, "graded_abelian_minus")],
        expected={"solution": {"beta": "1", "gamma": "1"}},
        notes=[
            "R_ab (not T_ab) acts on the minus sector by the sl(2) spinor rule",
            "{Qp_a, Qpb_b} = 2(R_ab + sj*eps_ab J + eps_ab C) with sj = %d" % sj,
        ],
        extra={"verbatim": verbatim},
    )
