from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supergca.catalog import build_gca, build_su22_2N
from supergca.catalog.su22 import su22_weyl
from supergca.contract import (
    PIPELINES,
    ContractionSpec,
    MissingWeight,
    UnknownPipeline,
    assign_weights,
    contract_limit,
    rescale_table,
    run_named_contraction,
    scale_invariance,
    spec_from_mapping,
)
from supergca.salg import Generator, check_graded_jacobi


def _o42():
    t = build_su22_2N(1).table
    return t.subtable([g for g in t.gens if g.name in ("P", "K", "M", "D")])


def test_zero_weights_identity():
    t = build_gca(3).table
    assert contract_limit(rescale_table(t, spec_from_mapping({g: 0 for g in t.gens}))).table == t


def test_missing_weight():
    t = build_gca(2).table
    with pytest.raises(MissingWeight):
        rescale_table(t, ContractionSpec({}))
    with pytest.raises(ValueError):
        spec_from_mapping({t.gens[0]: Fraction(1, 3)}).u_weight(t.gens[0])


def test_kp_exponent():
    # K_i = c^2 F_i, P_i unscaled: [K_i, P_j] picks up c^-2, i.e. u^-4 in u = c^(1/2)
    t = _o42()
    r = rescale_table(t, assign_weights("bosonic-o42", t.gens))
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            e = r.bracket_gens(r.gen("K", i), r.gen("P", j))
            assert e and all(c.u_powers() == {-4} for _g, c in e)


def test_negated_spec_roundtrip():
    src, w = su22_weyl(1)
    spec = assign_weights("composed-n1", src.gens)
    back = rescale_table(rescale_table(src, spec), spec.negated())
    assert back.u_powers() == {0}
    assert back == src


def test_inverted_p0_weight_is_invalid():
    src, _w = su22_weyl(1)
    spec = assign_weights("physical-n1", src.gens)
    spec.weights[src.gen("P", 0)] = Fraction(-1)
    out = contract_limit(rescale_table(src, spec))
    assert not out.valid and out.table is None
    assert any(a.startswith("Qp") and b.startswith("Qp") and g == "P[0]" for a, b, g, _t in out.offenders)


def test_weights_examples():
    src, _w = su22_weyl(1)
    phys = assign_weights("physical-n1", src.gens)
    comp = assign_weights("composed-n1", src.gens)
    p0, p1 = src.gen("P", 0), src.gen("P", 1)
    assert phys.weights[p0] == 1  # P0 = H / c
    assert comp.weights[p1] - phys.weights[p1] == -1  # P'_i = lam P_i at lam = c
    with pytest.raises(UnknownPipeline):
        assign_weights("nope")
    with pytest.raises(UnknownPipeline):
        run_named_contraction("nope")


@pytest.mark.parametrize("name", sorted(PIPELINES))
def test_pipelines(name):
    r = run_named_contraction(name)
    assert r.outcome.valid
    assert all(ok for _n, ok, _d in r.checks), [c for c in r.checks if not c[1]]
    assert check_graded_jacobi(r.renamed) == []


def test_composed_plus_sector_names():
    r = run_named_contraction("composed-n1")
    names = {c[0] for c in r.checks}
    assert {"golden_rescaled", "plus_sector_exact", "d21_dictionary_rescaled", "tminus_vanishes"} <= names
    plus = {g.name for g in r.renamed.gens} - {"Qm", "Sm", "P", "B", "F", "A0", "Tm"}
    assert plus == {"Qp", "Sp", "H", "K", "D", "J", "Tp"}


@settings(max_examples=4, deadline=None)
@given(st.sampled_from([4, 9, 16]))
def test_scale_invariance(lam):
    ok, detail = scale_invariance("composed-n1", lam)
    assert ok, detail


def test_scale_invariance_rejects_non_squares():
    with pytest.raises(ValueError):
        scale_invariance("physical-n1", 3)
    with pytest.raises(UnknownPipeline):
        scale_invariance("d1-diagonal")


def test_generator_name_validation():
    with pytest.raises(ValueError):
        Generator("1bad")
