from __future__ import annotations

import pytest

from supergca.catalog import (
    REGISTRY,
    UnknownCase,
    UnsupportedN,
    build_d21_extended,
    build_expected_gca3_susy,
    build_gca,
    build_n1_dictionary,
    build_osp12_extended,
    build_osp_n2,
    build_su22_2N,
    build_su111_extended,
    build_weyl_map,
    case_ids,
    coset_dim_report,
    get_case,
    rep_matrix,
)
from supergca.catalog.golden import golden_gen, internal_checks
from supergca.catalog.su22 import su22_weyl
from supergca.exactmath import Scalar
from supergca.linalg import express, row_basis
from supergca.salg import (
    LinComb,
    bracket,
    check_graded_jacobi,
    check_split_structure,
    check_star_compatibility,
    dimension_report,
)
from supergca.spinorkit import sigma

I = Scalar.parse("i")


def _structure_ok(case) -> None:
    t = case.table
    assert check_graded_jacobi(t) == []
    for _name, spec, mode in case.splits:
        assert spec.is_total(t)
        assert check_split_structure(t, spec, mode).ok, mode
    if case.star is not None:
        assert check_star_compatibility(t, case.star).ok


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_gca(d):
    c = build_gca(d)
    assert dimension_report(c.table).as_tuple() == (3 + d * (d - 1) // 2 + 3 * d, 0)
    assert {m for _n, _s, m in c.splits} == {"semidirect", "graded_abelian_minus"}
    _structure_ok(c)


def test_gca_d1_has_no_rotations():
    assert "J" not in dimension_report(build_gca(1).table).families


def test_d21_unextended_dims():
    assert dimension_report(build_d21_extended(include_extension=False).table).as_tuple() == (9, 8)


def test_d21_extended_fixed_point():
    _structure_ok(build_d21_extended(1, beta=1, gamma=1))


@pytest.mark.parametrize("n,dims", [(0, (3, 0)), (1, (3, 2)), (2, (4, 4)), (3, (6, 6)), (4, (9, 8))])
def test_osp_n2(n, dims):
    c = build_osp_n2(n)
    assert dimension_report(c.table).as_tuple() == dims
    _structure_ok(c)


def test_osp12_relations():
    t = build_osp_n2(1).table
    for a, b in ((1, 1), (1, 2), (2, 2)):
        assert t.bracket_gens(t.gen(*_q(t, a)), t.gen(*_q(t, b))) == t.lc("R", a, b, coef=2)


def _q(t, a):
    g = next(g for g in t.gens if g.odd and g.labels[0] == a)
    return (g.name, *g.labels)


def test_osp12_extended():
    c = build_osp12_extended(1)
    assert dimension_report(c.table).as_tuple() == (6, 4)
    _structure_ok(c)


def test_su111_central_charge_action():
    c = build_su111_extended(-1, 2)
    t = c.table
    C = t.gen("C")
    plus = {"Qp", "Qpb", "R", "J", "C"}
    assert all(t.bracket_gens(C, g).is_zero() for g in t.gens if g.name in plus)
    for a in (1, 2):
        assert t.bracket_gens(C, t.gen("Qm", a)) == t.lc("Qm", a, coef=-2 * I)
    _structure_ok(c)


@pytest.mark.parametrize("N", [1, 2])
def test_su22(N):
    c = build_su22_2N(N)
    assert dimension_report(c.table).as_tuple() == (15 + 4 * N * N, 16 * N)
    _structure_ok(c)


def test_su22_n2_axial_charge_central():
    t = build_su22_2N(2).table
    A = t.gen("A")
    assert all(t.bracket_gens(A, g).is_zero() for g in t.gens)
    t1 = build_su22_2N(1).table
    assert t1.bracket_gens(t1.gen("A"), t1.gen("Q", 1, 1)) == t1.lc("Q", 1, 1, coef=Scalar.parse("-1/2"))


def test_su22_rejects_other_n():
    with pytest.raises(UnsupportedN):
        build_su22_2N(3)


@pytest.mark.parametrize("N", [1, 2])
def test_weyl_map_roundtrip(N):
    w = build_weyl_map(N)
    for g in w.old_gens:
        assert w.to_old(w.to_new(LinComb.of(g))) == LinComb.of(g)
    for g in w.new_gens:
        assert w.to_new(w.to_old(LinComb.of(g))) == LinComb.of(g)


def test_weyl_n1_tminus_vanishes():
    w = build_weyl_map(1)
    assert len(w.new["Tm"]) == 0
    assert all(w.t_pm(-1, a, b).is_zero() for a in (1, 2) for b in (1, 2))


@pytest.mark.parametrize("N", [1, 2])
def test_weyl_basis_brackets(N):
    t, w = su22_weyl(N)
    om = w.n2 // 2
    Qp, Qm = lambda *l: t.lc("Qp", *l), lambda *l: t.lc("Qm", *l)
    for A in range(1, w.n2 + 1):
        for B in range(1, w.n2 + 1):
            o = 1 if B == A + om else (-1 if A == B + om else 0)
            for al in (1, 2):
                for be in (1, 2):
                    e = {(1, 2): 1, (2, 1): -1}.get((al, be), 0)
                    assert bracket(t, Qp(al, A), Qp(be, B)) == t.lc("P", 0, coef=2 * o * e)
                    # (sigma_i)_{al be} = eps_{be ga} (sigma_i)_al^ga
                    want = LinComb()
                    for i in (1, 2, 3):
                        s = sum((({(1, 2): 1, (2, 1): -1}.get((be, ga), 0)) * sigma(i)[al - 1][ga - 1] for ga in (1, 2)), Scalar.const(0))
                        want = want + t.lc("P", i, coef=Scalar.const(2 * o) * s)
                    assert bracket(t, Qp(al, A), Qm(be, B)) == want


@pytest.mark.parametrize("N", [1, 2])
def test_golden_tables(N):
    c = build_expected_gca3_susy(N)
    assert dimension_report(c.table).as_tuple() == (15 + 4 * N * N, 16 * N)
    _structure_ok(c)
    checks = internal_checks(c.table, N, contracted=True)
    assert all(ok for _n, ok, _d in checks), checks


def test_golden_n1_census():
    assert dimension_report(build_expected_gca3_susy(1).table).as_tuple() == (19, 16)


def test_golden_tminus_annihilates_odd_minus():
    t = build_expected_gca3_susy(2).table
    tm = [g for g in t.gens if g.name == "Tm"]
    assert len(tm) == 5
    for x in tm:
        for g in t.gens:
            if g.name in ("Qm", "Sm", "Tm"):
                assert t.bracket_gens(x, g).is_zero()


def test_golden_verbatim_fails_jacobi():
    # the relations exactly as transcribed, without the three sign corrections
    assert check_graded_jacobi(build_expected_gca3_susy(1, fixes=()).table)
    assert check_graded_jacobi(build_expected_gca3_susy(2, fixes=()).table)


def _flat(r):
    n = len(r.rows)
    return {i * n + j: v for i in range(n) for j, v in enumerate(r.rows[i]) if not v.is_zero()}


def _comm(x, y):
    n = len(x.rows)
    out = {}
    for i in range(n):
        for j in range(n):
            v = sum((x.rows[i][k] * y.rows[k][j] - y.rows[i][k] * x.rows[k][j] for k in range(n)), Scalar.const(0))
            if not v.is_zero():
                out[i * n + j] = v
    return out


@pytest.mark.parametrize("N", [1, 2])
def test_rep_matrices(N):
    n2 = 2 * N
    U = [rep_matrix("U", N, a, b) for a in range(1, n2 + 1) for b in range(1, n2 + 1)]
    tau = [rep_matrix("tau", N, a, b) for a in range(1, n2 + 1) for b in range(1, n2 + 1)]
    ub = [U[k] for k in row_basis([_flat(u) for u in U])]
    assert len(ub) == N * (2 * N + 1)
    assert len(row_basis([_flat(t) for t in tau])) == 2 * N * N - N - 1
    basis = [_flat(u) for u in ub]
    for x in ub:
        for y in ub:
            assert express(basis, _comm(x, y)) is not None
    # (U^1_1)^C_D = delta^1_D delta^C_1 - Omega^{1C} Omega_{1D}
    h = Scalar.const(1) - Scalar.const(1) / N
    assert U[0][1, 1] == Scalar.const(1) and U[0][N + 1, N + 1] == Scalar.const(-1)
    assert tau[0][1, 1] == h and tau[0][N + 1, N + 1] == h


def test_n1_dictionary_names():
    d = build_n1_dictionary()
    f = {str(k): v for k, v in d.forward.items()}
    assert f["R[1,1]"] == LinComb.of(golden_gen("H"))
    assert f["R[2,2]"] == LinComb.of(golden_gen("K"))
    assert f["R[1,2]"] == LinComb.of(golden_gen("D"), -1)
    # J_{11} = J_i (sigma_i)_1^ga eps_{ga 1} = -J_i (sigma_i)_1^2
    assert f["J[1,1]"] == LinComb({golden_gen("J", 2, 3): -1, golden_gen("J", 1, 3): Scalar.parse("-i")})
    assert len(d.gca_gens) == len(d.d21_gens) == 35


@pytest.mark.parametrize(
    "case,n,coset",
    [("d4", 1, (15, 8)), ("d5", 1, (22, 16)), ("d5", 2, (22, 32)), ("d2", 1, (6, 4)), ("d2", 2, (8, 8))],
)
def test_coset_dims(case, n, coset):
    assert coset_dim_report(case, n).coset == coset


def test_coset_errors():
    with pytest.raises(ValueError):
        coset_dim_report("d4", 2)
    with pytest.raises(ValueError):
        coset_dim_report("d7")


def test_registry():
    ids = case_ids()
    assert ids == sorted(ids) and len(ids) >= 14
    assert {"d1-diagonal", "coset-dims-d5", "d21-ext", "composed-n2"} <= set(ids)
    assert get_case("gca-d3").kind == "table"
    assert all(e.anchor for e in REGISTRY.values())
    with pytest.raises(UnknownCase):
        get_case("nope")
