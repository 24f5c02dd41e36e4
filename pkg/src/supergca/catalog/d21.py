"""D(2,1;alpha) in the spinorial basis and its graded abelian enlargement."""

from __future__ import annotations

from ..exactmath import Scalar, as_scalar, param
from ..salg import LinComb, SplitSpec, StarStructure, TableBuilder
from ._util import HALF, AlgebraCase, Family, I, eps, epsu, lsum

S2 = (1, 2)


def spin_act(i: int, j: int, k: int) -> list[tuple[object, int]]:
    """[X_ij, psi_k] = -i eps_{k(i} psi_{j)} as a list of (coefficient, index)."""
    out = []
    if eps(k, i):
        out.append((-I * HALF * eps(k, i), j))
    if eps(k, j):
        out.append((-I * HALF * eps(k, j), i))
    return out


def sl2_bracket(X: Family, i, j, k, l) -> LinComb:
    """[X_ij, X_kl] = i(eps_ik X_jl + eps_jl X_ik)."""
    return lsum([X(j, l, coef=I * eps(i, k)), X(i, k, coef=I * eps(j, l))])


def _families(extension: bool, swap: bool):
    Qp = Family("Qp", [S2, S2, S2], odd=True)
    R = Family("R", [S2, S2], sym=[(0, 1)])
    J = Family("J", [S2, S2], sym=[(0, 1)])
    T = Family("T", [S2, S2], sym=[(0, 1)])
    fams = {"Qp": Qp, "R": R, "J": J, "T": T}
    if extension:
        fams["Qm"] = Family("Qm", [S2, S2, S2], odd=True)
        fams["A"] = Family("A", [S2, S2, S2, S2], sym=[(0, 1), (2, 3)])
        fams["A0"] = Family("A0", [])
    return fams


def build_d21_extended(
    alpha=None,
    include_extension: bool = True,
    swap_su2: bool = False,
    beta=None,
    gamma=None,
) -> AlgebraCase:
    """Extended D(2,1;alpha); parameters default to the symbols alpha, beta, gamma.

    With ``swap_su2`` the abelian vector generators carry the internal su(2)
    index (A[a,b,A,B]) instead of the spatial one.
    """
    al = param("alpha") if alpha is None else as_scalar(alpha)
    be = param("beta") if beta is None else as_scalar(beta)
    ga = param("gamma") if gamma is None else as_scalar(gamma)
    f = _families(include_extension, swap_su2)
    Qp, R, J, T = f["Qp"], f["R"], f["J"], f["T"]
    gens = [*Qp, *R, *J, *T]
    if include_extension:
        Qm, A, A0 = f["Qm"], f["A"], f["A0"]
        gens += [*Qm, *A, *A0]
    b = TableBuilder(gens, meta={"family": "d21", "extension": include_extension, "swap_su2": swap_su2})

    two = Scalar.const(2)
    # odd-odd
    for g in Qp:
        a, al_, A_ = g.labels
        for h in Qp:
            bb, be_, B_ = h.labels
            b.set(
                g,
                h,
                lsum(
                    [
                        R(a, bb, coef=two * eps(al_, be_) * eps(A_, B_)),
                        J(al_, be_, coef=two * al * eps(a, bb) * eps(A_, B_)),
                        T(A_, B_, coef=-two * (1 + al) * eps(a, bb) * eps(al_, be_)),
                    ]
                ),
            )
    # su(2) x su(2) x sl(2)
    for X in (R, J, T):
        for g in X:
            for h in X:
                b.set(g, h, sl2_bracket(X, *g.labels, *h.labels))
    odd_fams = [Qp] + ([f["Qm"]] if include_extension else [])
    for Q in odd_fams:
        for slot, X in enumerate((R, J, T)):
            for g in X:
                i, j = g.labels
                for h in Q:
                    labs = list(h.labels)
                    out = []
                    for c, new in spin_act(i, j, labs[slot]):
                        nl = list(labs)
                        nl[slot] = new
                        out.append(Q(*nl, coef=c))
                    b.set(g, h, lsum(out))
    if include_extension:
        _extension(b, f, be, ga, swap_su2)
    for X in (R, J, T):
        for Y in (R, J, T):
            if X is not Y:
                for g in X:
                    for h in Y:
                        b.set(g, h, LinComb())
    t = b.build()

    assigned = {}
    for name, v in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if v is not None:
            assigned[name] = as_scalar(v).render()
    case_id = "d21-ext-swapped" if swap_su2 else ("d21-ext" if include_extension else "d21")
    plus = {"Qp", "R", "J", "T"}
    splits = []
    if include_extension:
        s = SplitSpec.by_names(t, plus)
        splits = [("semidirect", s, "semidirect"), ("graded_abelian_minus", s, "graded_abelian_minus")]
    notes = []
    if include_extension:
        notes = [
            "[Qp, A0] acts on the same (a, alpha, A) labels as Qp: [Qp[a,al,A], A0] = i*Qm[a,al,A]",
            "second term of [J, A] symmetrizes with the fourth A label: -i eps_{d(al} A_{ab,be)c}",
        ]
    return AlgebraCase(
        id=case_id,
        family="d21",
        table=t,
        params=assigned,
        star=_star(t, f, include_extension, swap_su2),
        splits=splits,
        expected={"solution": {"alpha": "-2" if swap_su2 else "1", "beta": "1", "gamma": "1"}},
        notes=notes,
    )


def _extension(b: TableBuilder, f, be: Scalar, ga: Scalar, swap: bool) -> None:
    Qp, R, J, T, Qm, A, A0 = (f[k] for k in ("Qp", "R", "J", "T", "Qm", "A", "A0"))
    # vector slot of A is the spatial index (slot 1 of Q) or, swapped, the internal one (slot 2)
    vs, other = (2, 1) if swap else (1, 2)
    V = T if swap else J
    W = J if swap else T
    for g in Qp:
        gl = g.labels
        for h in Qm:
            hl = h.labels
            b.set(
                g,
                h,
                lsum(
                    [
                        A(gl[0], hl[0], gl[vs], hl[vs], coef=be * eps(gl[other], hl[other])),
                        A0(coef=ga * eps(gl[0], hl[0]) * eps(gl[1], hl[1]) * eps(gl[2], hl[2])),
                    ]
                ),
            )
        # [Qp_{a al A}, A_{bc, be ga}] = -4i eps_{a(b} eps_{al(be} Qm_{c) ga) A}
        for h in A:
            bb, c, be_, ga_ = h.labels
            out = []
            for (x, y) in ((bb, c), (c, bb)):
                for (p, q) in ((be_, ga_), (ga_, be_)):
                    co = eps(gl[0], x) * eps(gl[vs], p)
                    if co:
                        nl = [y, 0, 0]
                        nl[vs] = q
                        nl[other] = gl[other]
                        out.append(Qm(*nl, coef=-I * co))
            b.set(g, h, lsum(out))
        for h in A0:
            b.set(g, h, Qm(*gl, coef=I))
    # covariance of the vectors: -i eps_{c(a} A_{b)d} - i eps_{d(a} A_{b)c} on each pair
    for slot_pair, X in (((0, 1), R), ((2, 3), V)):
        for g in X:
            i, j = g.labels
            for h in A:
                labs = list(h.labels)
                out = []
                for pos in slot_pair:
                    for c, new in spin_act(i, j, labs[pos]):
                        nl = list(labs)
                        nl[pos] = new
                        out.append(A(*nl, coef=c))
                b.set(g, h, lsum(out))
    for g in W:
        for h in [*A, *A0]:
            b.set(g, h, LinComb())
    for X in (R, J, T):
        for g in X:
            for h in A0:
                b.set(g, h, LinComb())
    for fam1, fam2 in ((Qm, Qm), (Qm, A), (Qm, A0), (A, A), (A, A0)):
        for g in fam1:
            for h in fam2:
                b.set(g, h, LinComb())


def _star(t, f, extension: bool, swap: bool) -> StarStructure:
    images = {}

    def lower2(X, *pre):
        # X[..., a, b] -> eps^{ac} eps^{bd} X[..., c, d]
        def img(*labs):
            head, (p, q) = labs[:-2], labs[-2:]
            return lsum(X(*head, c, d, coef=epsu(p, c) * epsu(q, d)) for c in S2 for d in S2)

        return img

    for Qname in ("Qp", "Qm") if extension else ("Qp",):
        Q = f[Qname]
        for g in Q:
            a, al_, A_ = g.labels
            images[g] = lsum(Q(a, c, d, coef=epsu(al_, c) * epsu(A_, d)) for c in S2 for d in S2)
    for g in f["R"]:
        images[g] = LinComb.of(g)
    for name in ("J", "T"):
        X = f[name]
        for g in X:
            images[g] = lower2(X)(*g.labels)
    if extension:
        A = f["A"]
        for g in A:
            images[g] = lower2(A)(*g.labels)
        for g in f["A0"]:
            images[g] = LinComb.of(g)
    return StarStructure(images)
