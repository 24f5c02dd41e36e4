from __future__ import annotations

import json
from pathlib import Path

import pytest

from supergca.catalog import UnknownCase
from supergca.cli import (
    InvalidOverride,
    dump_case,
    emit_report,
    list_cases,
    main,
    render_json,
    run_case,
)
from supergca.salg import loads

GOLDEN = Path(__file__).parent / "golden"


def test_run_case_d21():
    r = run_case("d21-ext")
    assert r.status == "pass"
    c = {x["name"]: x for x in r.checks}
    assert "alpha = 1, beta = 1, gamma = 1" in c["constraints"]["detail"]
    assert c["osp42_point_excluded"]["ok"]


def test_run_case_gca_d3():
    r = run_case("gca-d3")
    assert r.status == "pass" and r.deviations == []
    assert {x["name"]: x["detail"] for x in r.checks}["dims"].startswith("(even, odd) = (15, 0)")


def test_run_case_composed_n2_tminus_deviation():
    r = run_case("composed-n2")
    assert r.status == "deviation"
    assert all(c["ok"] for c in r.checks)
    dev = [d for d in r.deviations if d["citation"] == "internal coset of dimension N(2N-1)"]
    assert dev and dev[0]["computed"] == "dim span(T-) = 5" and dev[0]["printed_value"] == "6"


def test_overrides():
    r = run_case("d21-ext", {"alpha": "1", "beta": "1", "gamma": "1"})
    assert r.status == "pass"
    r = run_case("osp12-ext", {"beta": "2"})
    assert r.status == "fail"
    with pytest.raises(InvalidOverride):
        run_case("gca-d3", {"d": "2"})
    with pytest.raises(InvalidOverride):
        run_case("osp12-ext", {"gamma": "1"})
    with pytest.raises(InvalidOverride):
        run_case("osp12-ext", {"beta": "alpha"})
    with pytest.raises(UnknownCase):
        run_case("gca-d9")


def test_list_cases():
    ids = [c["id"] for c in list_cases()]
    assert "d1-diagonal" in ids and "coset-dims-d5" in ids
    assert len(ids) >= 14 and ids == sorted(ids)


def test_emit_empty(tmp_path):
    out = tmp_path / "r.json"
    emit_report([], "json", str(out))
    assert json.loads(out.read_text()) == []


def test_single_pass_case_schema():
    data = json.loads(render_json([run_case("gca-d2")]))
    assert data[0]["status"] == "pass" and data[0]["deviations"] == []
    assert set(data[0]) == {"case", "status", "checks", "deviations", "millis"}
    assert data[0]["millis"] is None
    assert all(set(c) == {"name", "ok", "detail"} for c in data[0]["checks"])


def test_deviation_schema():
    r = run_case("su22-n2")
    assert r.status == "deviation"
    for d in r.deviations:
        assert set(d) == {"computed", "printed_value", "citation", "note"}


def test_timings_flag():
    assert isinstance(run_case("gca-d1", timings=True).millis, int)


def test_main_exit_codes(tmp_path, capsys):
    assert main(["verify", "gca-d3"]) == 0
    assert main(["verify", "su22-n1"]) == 1
    assert main(["verify", "su22-n1", "--allow-deviations"]) == 0
    assert main(["verify", "no-such-case"]) == 2
    assert main(["verify", "gca-d3", "--set", "beta=1"]) == 2
    assert main(["verify", "gca-d3", "--out", str(tmp_path / "missing" / "r.txt")]) == 3
    capsys.readouterr()
    assert main(["list-cases", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == len(list_cases())


def test_report_sorted_and_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    ids = ["osp12-ext", "coset-dims-d4", "d1-diagonal"]
    assert main(["verify", *ids, "--format", "json", "--out", str(a)]) == 0
    assert main(["verify", *reversed(ids), "--format", "json", "--out", str(b), "--jobs", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert [x["case"] for x in json.loads(a.read_text())] == sorted(ids)


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("*.txt")), ids=lambda p: p.stem)
def test_dump_matches_golden(path):
    text = dump_case(path.stem)
    assert text == path.read_text()
    if not path.stem.startswith("coset"):
        assert loads(text) is not None
