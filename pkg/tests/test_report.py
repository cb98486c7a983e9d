import json

import pytest

from codedist.code import LinearCode, min_distance
from codedist.constructions import builtin
from codedist.report import Report, RunConfig, build_report, format_tsv

ALL = dict(greedy=True, radii=True, mu=True, sld=True, bounds=True, extend=2, asymptotic=2)


def test_json_round_trip():
    rep = build_report(builtin("duality-C1"), RunConfig(), **ALL)
    again = Report.parse(rep.emit())
    assert again == rep
    assert again.emit() == rep.emit()
    with pytest.raises(ValueError):
        Report.parse(json.dumps({"schema": 99}))


def test_report_contents():
    C = builtin("duality-C1")
    d = build_report(C, RunConfig(), **ALL).data
    assert d["schema"] == 1 and d["code"]["N"] == 5 and d["code"]["k"] == 2
    assert [d["alpha"]["values"][str(i)] for i in range(1, 6)] == [4, 2, 2, 2, 1]
    assert d["greedy"]["values"]["1"] == 4
    assert d["radii"]["covering_radius"] == d["radii"]["rho"]["1"]
    assert d["mu"]["value"] == 0 and d["mu"]["is_maximal"] is False
    assert d["asymptotic"]["certified"] is False
    assert d["asymptotic"]["marker"] == "uncertified, swept l <= 2"
    assert d["asymptotic"]["values"]["1"]["value"] == 5
    assert not d.get("budget_exceeded")


def test_witnesses_reverify():
    C = builtin("ternary-422")
    d = build_report(C, RunConfig()).data
    for i, rows in d["alpha"]["witnesses"].items():
        D = LinearCode(C.field, C.ambient, rows)
        assert D.k == int(i) and min_distance(D) == d["alpha"]["values"][i]


def test_reported_alpha_is_monotone():
    for name in ("duality-C1", "F4-C2", "ternary-422", "nested-D1"):
        d = build_report(builtin(name), RunConfig()).data
        vals = [d["alpha"]["values"][str(i)] for i in range(1, d["code"]["N"] + 1)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_workers_do_not_change_output():
    C = builtin("even-7")
    one = build_report(C, RunConfig(workers=1), greedy=True, radii=True).emit()
    many = build_report(C, RunConfig(workers=3), greedy=True, radii=True).emit()
    assert one == many


def test_skipped_indices_are_marked():
    rep = build_report(builtin("BR17-C1"), RunConfig(budget=20000, alpha_range=(4, 6)))
    d = rep.data
    assert rep.budget_exceeded
    assert set(d["alpha"]["skipped"]) == {"5", "6"}
    assert "4" in d["alpha"]["values"] and "5" not in d["alpha"]["values"]
    tsv = format_tsv(rep)
    assert "alpha\t4,?,?" in tsv and "skipped\talpha_5" in tsv


def test_tsv_lines():
    tsv = format_tsv(build_report(builtin("even-4"), RunConfig(), **ALL))
    keys = [line.split("\t")[0] for line in tsv.splitlines()]
    for k in ("code", "alpha", "greedy", "covering_radius", "rho", "mu", "sld", "ceiling", "extend_2", "asymptotic", "budget"):
        assert k in keys
    assert "sld\t2,4" in tsv and "mu\t1\tmaximal=true" in tsv
    assert "uncertified, swept l <= 2" in tsv


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(budget=10)
    with pytest.raises(ValueError):
        RunConfig(workers=0)
    with pytest.raises(ValueError):
        RunConfig(output="xml")
