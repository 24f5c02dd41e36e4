from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supergca.catalog import (
    build_d21_extended,
    build_gca,
    build_osp12_extended,
    build_su22_2N,
)
from supergca.exactmath import Scalar
from supergca.salg import (
    ODD,
    BracketTable,
    Generator,
    InconsistentRelation,
    LinComb,
    ParityViolation,
    SplitSpec,
    StarStructure,
    TableBuilder,
    UnknownGenerator,
    bracket,
    change_basis,
    check_graded_jacobi,
    check_split_structure,
    check_star_compatibility,
    compare_tables,
    dimension_report,
    direct_sum,
    dumps,
    loads,
)


def _with_entry_scaled(t: BracketTable, a: Generator, b: Generator, s) -> BracketTable:
    entries = {}
    for (i, j), e in t.entries():
        x, y = t.gens[i], t.gens[j]
        lc = LinComb({t.gens[k]: c for k, c in e.items()})
        entries[(x, y)] = lc.scale(s) if {x, y} == {a, b} else lc
    return BracketTable(t.gens, entries, t.meta)


def test_gca3_r0_r1():
    t = build_gca(3).table
    assert bracket(t, t.lc("R", 0), t.lc("R", 1)) == t.lc("R", 2, coef=Scalar.parse("i"))


def test_even_self_bracket_vanishes():
    t = build_gca(3).table
    for g in t.gens:
        assert bracket(t, LinComb.of(g), LinComb.of(g)).is_zero()


def test_graded_antisymmetry_is_derived():
    t = build_osp12_extended(1).table
    q1, q2, r = t.gen("Qp", 1), t.gen("Qp", 2), t.gen("R", 1, 2)
    assert t.bracket_gens(q1, q2) == t.bracket_gens(q2, q1)
    assert t.bracket_gens(r, q1) == -t.bracket_gens(q1, r)


def test_extended_d21_abelian_a_sector():
    t = build_d21_extended(1, beta=1, gamma=1).table
    a = [g for g in t.gens if g.name == "A"]
    assert all(t.bracket_gens(x, y).is_zero() for x in a for y in a)


def test_jacobi_gca3_and_symbolic_d21():
    assert check_graded_jacobi(build_gca(3).table) == []
    assert check_graded_jacobi(build_d21_extended(include_extension=False).table) == []


def test_jacobi_detects_corruption():
    t = build_d21_extended(include_extension=False).table
    bad = _with_entry_scaled(t, t.gen("R", 1, 1), t.gen("R", 2, 2), 2)
    assert check_graded_jacobi(bad)


def test_jacobi_parallel_matches_serial():
    t = build_d21_extended(1, beta=1, gamma=2).table
    serial = check_graded_jacobi(t)
    assert serial
    assert check_graded_jacobi(t, jobs=3) == serial


def test_builder_rejects_contradictions():
    x, y = Generator("X"), Generator("Y")
    b = TableBuilder([x, y])
    b.set(x, y, LinComb.of(y))
    b.set(y, x, LinComb.of(y, -1))
    with pytest.raises(InconsistentRelation):
        b.set(x, y, LinComb.of(y, 2))


def test_parity_and_closure_errors():
    x, q = Generator("X"), Generator("Q", (), ODD)
    with pytest.raises(ParityViolation):
        BracketTable([x, q], {(q, q): LinComb.of(q)})
    with pytest.raises(UnknownGenerator):
        BracketTable([x], {(x, x): LinComb.of(Generator("Z"))})
    with pytest.raises(InconsistentRelation):
        BracketTable([x], {(x, x): LinComb.of(x)})


def test_change_basis_identity():
    t = build_gca(2).table
    assert change_basis(t, {g: LinComb.of(g) for g in t.gens}, t.gens) == t


def test_direct_sum_counts_and_cross_brackets():
    full = build_osp12_extended(1).table
    t1 = full.subtable([g for g in full.gens if g.name in ("Qp", "R")])
    s = direct_sum(t1, t1)
    assert dimension_report(s).as_tuple() == (6, 4)
    left = [g for g in s.gens if g.name.endswith("L")]
    right = [g for g in s.gens if g.name.endswith("R")]
    assert left and right
    assert all(s.bracket_gens(a, b).is_zero() for a in left for b in right)
    assert check_graded_jacobi(s) == []


def test_split_structure_gca():
    t = build_gca(3).table
    s = SplitSpec.by_names(t, {"R", "J"})
    assert s.is_total(t)
    assert check_split_structure(t, s, "semidirect").ok
    assert check_split_structure(t, s, "graded_abelian_minus").ok
    wrong = SplitSpec.by_names(t, {"A"})
    assert not check_split_structure(t, wrong, "semidirect").ok


def test_star_examples():
    c = build_d21_extended(1, beta=1, gamma=1)
    assert check_star_compatibility(c.table, c.star).ok
    g = c.table.gen("A0")
    flipped = StarStructure({**c.star.images, g: LinComb.of(g, -1)})
    rep = check_star_compatibility(c.table, flipped)
    assert not rep.ok and rep.involutive


def test_dimension_examples():
    assert dimension_report(build_gca(3).table).as_tuple() == (15, 0)
    assert dimension_report(build_su22_2N(1).table).as_tuple() == (19, 16)
    assert dimension_report(build_d21_extended(1, beta=1, gamma=1).table).as_tuple() == (19, 16)


def test_compare_self_exact():
    t = build_d21_extended(1, beta=1, gamma=1).table
    assert compare_tables(t, t, None, "exact").ok


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([1, 2, 3, -1, -2, "1/2", "i", "sqrt2"]), min_size=10, max_size=10))
def test_compare_finds_diagonal_rescaling(factors):
    t = build_osp12_extended(1).table
    m = {g: LinComb.of(g, Scalar.parse(str(f))) for g, f in zip(t.gens, factors)}
    moved = change_basis(t, m, t.gens)
    assert check_graded_jacobi(moved) == []
    assert compare_tables(moved, t, None, "up_to_diagonal_rescaling").ok
    if any(str(f) != "1" for f in factors):
        assert not compare_tables(moved, t, None, "exact").ok or moved == t


@pytest.mark.parametrize("build", [lambda: build_gca(4).table, lambda: build_d21_extended().table, lambda: build_su22_2N(1).table])
def test_dump_load_roundtrip(build):
    t = build()
    text = dumps(t)
    assert loads(text) == t
    assert dumps(loads(text)) == text
