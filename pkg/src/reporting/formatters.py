import json
from typing import Dict, Iterable, List, Optional

from ..models.axioms import AxiomReport
from ..models.campaigns import CampaignReport
from ..models.metric import CLASS_NAMES, ClassificationReport
from ..models.transit import TransitFunction


def to_json(payload) -> str:
    """Stable JSON: sorted keys, two-space indent"""
    return json.dumps(payload, sort_keys=True, indent=2)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def classification_to_dict(report: ClassificationReport, graph6: Optional[str] = None) -> dict:
    out = {
        "classes": report.flags(),
        "witnesses": {name: w.to_dict() for name, w in sorted(report.witnesses.items())},
    }
    if graph6 is not None:
        out["graph6"] = graph6
    return out


def format_classification(report: ClassificationReport) -> str:
    lines = []
    for name in CLASS_NAMES:
        line = f"{name.replace('_', '-')}: {_flag(getattr(report, name))}"
        witness = report.witnesses.get(name)
        if witness is not None:
            line += f"  ({_describe_witness(witness.to_dict())})"
        lines.append(line)
    return "\n".join(lines)


def _describe_witness(w: dict) -> str:
    kind = w["kind"]
    if "missing" in w:
        return f"{kind} at {w['apex']}: {w['missing']}"
    if "cycle" in w:
        return f"isometric cycle {' '.join(map(str, w['cycle']))}"
    return f"{kind} on {' '.join(map(str, w['vertices']))}"


def axiom_report_to_dict(report: AxiomReport, r: Optional[TransitFunction] = None) -> dict:
    out = report.to_dict()
    if r is not None and r.labels is not None and report.witness is not None:
        out["witness"] = r.names(report.witness)
    return out


def format_axiom_reports(reports: Iterable[AxiomReport], r: TransitFunction) -> str:
    lines = []
    for report in reports:
        if report.holds:
            lines.append(f"{report.axiom.value}: holds")
            continue
        binding = " ".join(f"{var}={r.name(v)}" for var, v in report.bindings().items())
        lines.append(f"{report.axiom.value}: fails  {binding}{_first_value(report, r)}")
    return "\n".join(lines)


def _first_value(report: AxiomReport, r: TransitFunction) -> str:
    """R on the first two witness points, which is where most violations show"""
    w = report.witness
    u, v = (w[0], w[0]) if len(w) == 1 else (w[0], w[1])
    values = ",".join(r.names(r(u, v)))
    return f"  R({r.name(u)},{r.name(v)})={{{values}}}"


def format_campaign(report: CampaignReport, limit: int = 10) -> str:
    lines = [f"{report.theorem}: {'pass' if report.passed else 'FAIL'}"]
    for key in sorted(report.universe):
        lines.append(f"  {key}: {report.universe[key]}")
    lines.append(f"  violations: {len(report.violations)}")
    for violation in report.violations[:limit]:
        subject = violation.get("graph6") or violation.get("fixture") or violation.get("g1") or ""
        lines.append(f"    [{violation['check']}] {subject} {violation['message']}".rstrip())
    if len(report.violations) > limit:
        lines.append(f"    ... {len(report.violations) - limit} more")
    return "\n".join(lines)


def format_fixture_table(rows: List[Dict[str, str]]) -> str:
    width = max(len(row["name"]) for row in rows) if rows else 0
    return "\n".join(f"{row['name']:<{width}}  fails {row['fails']:<4} {row['description']}" for row in rows)
