"""Machine-readable reports of computed invariants.

A report is a JSON object with ``"schema": 1``. Keys are strings, integer
indices included, so a report survives ``parse(emit(r)) == r`` unchanged.
Witnesses are lists of generator rows in canonical integer encoding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .budget import MIN_BUDGET, Budget, default_budget
from .code import HAMMING, LinearCode, sld_set
from .codefile import code_digest
from .errors import BudgetExceeded, CodeDistError
from .invariants import (
    asymptotic_distance,
    covering_radius,
    distance_profile,
    extended_distance,
    generalized_radius,
    greedy_profile,
    maximality_degree,
    singleton_profile,
)
from .search import DEFAULT_LEVEL_CAP

SCHEMA = 1


@dataclass
class RunConfig:
    budget: int = field(default_factory=default_budget)
    level_cap: int = DEFAULT_LEVEL_CAP
    workers: int = 1
    output: str = "tsv"
    alpha_range: tuple[int, int] | None = None

    def __post_init__(self):
        if self.budget < MIN_BUDGET:
            raise ValueError(f"budget must be at least {MIN_BUDGET}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.output not in ("tsv", "json"):
            raise ValueError("output must be tsv or json")


@dataclass
class Report:
    data: dict = field(default_factory=dict)

    def emit(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=True) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Report":
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(data)

    @property
    def budget_exceeded(self) -> bool:
        return bool(self.data.get("budget_exceeded"))


def _rows(M) -> list[list[int]]:
    return [[int(x) for x in r] for r in np.asarray(M)]


def _skip(report: dict, key: str, exc: Exception):
    report.setdefault("skipped", {})[key] = str(exc)
    if isinstance(exc, BudgetExceeded):
        report["budget_exceeded"] = True


def code_identity(C: LinearCode) -> dict:
    return {
        "sha256": code_digest(C),
        "q": C.q,
        "p": C.field.p,
        "e": C.field.e,
        "metric": C.ambient.describe(),
        "N": C.N,
        "k": C.k,
    }


def build_report(C: LinearCode, cfg: RunConfig, alpha: bool = True, greedy: bool = False,
                 radii: bool = False, mu: bool = False, sld: bool = False, bounds: bool = False,
                 extend: int | None = None, asymptotic: int | None = None) -> Report:
    r: dict = {"schema": SCHEMA, "code": code_identity(C), "budget": {"limit": cfg.budget, "spent": 0}}
    spent = 0

    def budget():
        return Budget(cfg.budget)

    if alpha:
        lo, hi = cfg.alpha_range or (1, C.N)
        prof = distance_profile(C, range(lo, hi + 1), cfg.budget, workers=cfg.workers)
        spent += prof.spent
        r["alpha"] = {
            "range": [lo, hi],
            "values": {str(i): v for i, v in sorted(prof.alpha.items())},
            "witnesses": {str(i): _rows(w) for i, w in sorted(prof.witnesses.items())},
            "skipped": {str(i): s for i, s in sorted(prof.skipped.items())},
            "filled": {str(i): s for i, s in sorted(prof.filled.items())},
            "crosschecked": [str(i) for i in prof.crosschecked],
        }
        if prof.skipped:
            r["budget_exceeded"] = True
    if greedy:
        b = budget()
        try:
            vals, chain = greedy_profile(C, b, cfg.level_cap)
            r["greedy"] = {"values": {str(i): v for i, v in enumerate(vals, 1)},
                           "chain": [_rows(g) for g in chain.generators]}
        except CodeDistError as exc:
            _skip(r, "greedy", exc)
        spent += b.spent
    if radii:
        b = budget()
        out = {}
        try:
            out["covering_radius"] = covering_radius(C, b)
            out["rho"] = {}
            for i in range(1, C.N - C.k + 1):
                out["rho"][str(i)] = generalized_radius(C, i, b)
        except BudgetExceeded as exc:
            _skip(r, "radii", exc)
        r["radii"] = out
        spent += b.spent
    if mu:
        b = budget()
        try:
            r["mu"] = {"value": maximality_degree(C, b)}
            r["mu"]["is_maximal"] = r["mu"]["value"] > 0
        except CodeDistError as exc:
            _skip(r, "mu", exc)
        spent += b.spent
    if sld:
        b = budget()
        if C.ambient.metric != HAMMING:
            _skip(r, "sld", ValueError("SLD sets are defined for the Hamming metric"))
        else:
            try:
                r["sld"] = sorted(sld_set(C, b))
            except BudgetExceeded as exc:
                _skip(r, "sld", exc)
        spent += b.spent
    if bounds:
        b = budget()
        try:
            sp = singleton_profile(C, b)
            r["bounds"] = {"ceiling": {str(i): v for i, v in enumerate(sp.bounds, 1)}, "flags": sp.flags,
                           "notes": sp.notes}
            if sp.floor_form is not None:
                r["bounds"]["floor_form"] = {str(i): v for i, v in enumerate(sp.floor_form, 1)}
        except BudgetExceeded as exc:
            _skip(r, "bounds", exc)
        spent += b.spent
    if extend:
        b = budget()
        out = {}
        try:
            for i in range(1, C.N + 1):
                out[str(i)] = extended_distance(C, extend, i, b)
        except CodeDistError as exc:
            _skip(r, "extend", exc)
        r["extend"] = {"degree": extend, "values": out}
        spent += b.spent
    if asymptotic:
        b = budget()
        out = {}
        try:
            for i in range(1, C.N + 1):
                res = asymptotic_distance(C, i, asymptotic, b)
                out[str(i)] = {"value": res.value, "stabilized_at": res.stabilized_at,
                               "constant_tail": res.constant_tail,
                               "values": {str(k): v for k, v in res.values.items()}}
        except CodeDistError as exc:
            _skip(r, "asymptotic", exc)
        r["asymptotic"] = {"degree_max": asymptotic, "certified": False,
                           "marker": f"uncertified, swept l <= {asymptotic}", "values": out}
        spent += b.spent
    r["budget"]["spent"] = spent
    return Report(r)


def _seq(values: dict, lo: int, hi: int) -> str:
    return ",".join(str(values.get(str(i), "?")) for i in range(lo, hi + 1))


def format_tsv(report: Report) -> str:
    d = report.data
    c = d["code"]
    lines = [f"code\t{c['metric']}\tq={c['q']}\tN={c['N']}\tk={c['k']}"]
    if "alpha" in d:
        lo, hi = d["alpha"]["range"]
        lines.append(f"alpha\t{_seq(d['alpha']['values'], lo, hi)}")
        for i, why in d["alpha"]["skipped"].items():
            note = " (filled from neighbours)" if i in d["alpha"]["filled"] else ""
            lines.append(f"skipped\talpha_{i}\t{why}{note}")
    if "greedy" in d:
        lines.append(f"greedy\t{_seq(d['greedy']['values'], 1, c['N'])}")
    if "radii" in d and "covering_radius" in d["radii"]:
        lines.append(f"covering_radius\t{d['radii']['covering_radius']}")
        lines.append(f"rho\t{_seq(d['radii']['rho'], 1, c['N'] - c['k'])}")
    if "mu" in d:
        lines.append(f"mu\t{d['mu']['value']}\tmaximal={str(d['mu']['is_maximal']).lower()}")
    if "sld" in d:
        lines.append("sld\t" + ",".join(map(str, d["sld"])))
    if "bounds" in d:
        lines.append(f"ceiling\t{_seq(d['bounds']['ceiling'], 1, c['N'])}")
        if "floor_form" in d["bounds"]:
            lines.append(f"ceiling_floor_form\t{_seq(d['bounds']['floor_form'], 1, c['N'])}")
        for flag, v in sorted(d["bounds"]["flags"].items()):
            lines.append(f"{flag}\t{str(v).lower()}")
    if "extend" in d:
        lines.append(f"extend_{d['extend']['degree']}\t{_seq(d['extend']['values'], 1, c['N'])}")
    if "asymptotic" in d:
        a = d["asymptotic"]
        vals = {i: v["value"] for i, v in a["values"].items()}
        lines.append(f"asymptotic\t{_seq(vals, 1, c['N'])}\t{a['marker']}")
    for key, why in d.get("skipped", {}).items():
        lines.append(f"skipped\t{key}\t{why}")
    lines.append(f"budget\tspent={d['budget']['spent']}\tlimit={d['budget']['limit']}")
    return "\n".join(lines) + "\n"
