"""보고서 출력 형식.

text 는 사람이 읽는 한국어 요약, structured 는 JSON 문서입니다.
JSON 필드 이름은 고정되어 있으며 다른 도구가 그대로 읽을 수 있습니다:

- invariants: euler, b1, h1_torsion, b2, b3, form_matrix, signature,
  parity, definiteness
- relative: euler, b1, h1_torsion, form_matrix, rank, signature, parity,
  definiteness
- verdict: verdict, witness, first, second
- validation: ok, violations[{kind, family, message}]
"""

from __future__ import annotations

import json
from typing import Any

from models.catalog_entry import CatalogEntry
from models.reports import (
    AuditReport,
    EulerAudit,
    HandleSummary,
    InvariantReport,
    RelativeReport,
    ValidationReport,
    Verdict,
)


def _dump(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


def _torsion_text(torsion: tuple[int, ...]) -> str:
    return " ⊕ ".join(f"Z/{t}" for t in torsion) if torsion else "없음"


# ── 사전 변환 ──

def invariant_dict(report: InvariantReport) -> dict[str, Any]:
    return {
        "euler": report.euler,
        "b1": report.b1,
        "h1_torsion": list(report.h1_torsion),
        "b2": report.b2,
        "b3": report.b3,
        "form_matrix": report.form_matrix.to_rows(),
        "signature": report.signature,
        "parity": report.parity.value,
        "definiteness": report.definiteness.value,
    }


def relative_dict(report: RelativeReport) -> dict[str, Any]:
    c = report.classification
    return {
        "euler": report.euler,
        "b1": report.b1,
        "h1_torsion": list(report.h1_torsion),
        "form_matrix": report.form_matrix.to_rows(),
        "rank": c.rank,
        "signature": c.signature,
        "parity": c.parity.value,
        "definiteness": c.definiteness.value,
    }


def validation_dict(report: ValidationReport) -> dict[str, Any]:
    return {
        "ok": report.ok,
        "violations": [
            {"kind": v.kind.value, "family": v.family, "message": v.message}
            for v in report.violations
        ],
    }


# ── 출력 ──

def format_report(report: InvariantReport, mode: str = "text", name: str = "") -> str:
    if mode == "structured":
        return _dump({"kind": "invariants", "name": name, **invariant_dict(report)})
    lines = [
        f"불변량: {name}" if name else "불변량",
        f"  χ = {report.euler}",
        f"  b1 = {report.b1}, H1 꼬임 = {_torsion_text(report.h1_torsion)}",
        f"  b2 = {report.b2}, b3 = {report.b3}",
        f"  교차형식 = {report.form_matrix}",
        f"  부호수 = {report.signature}",
        f"  홀짝성 = {report.parity.value}",
        f"  정부호성 = {report.definiteness.value}",
    ]
    return "\n".join(lines)


def format_relative(report: RelativeReport, mode: str = "text", name: str = "") -> str:
    if mode == "structured":
        return _dump({"kind": "relative", "name": name, **relative_dict(report)})
    c = report.classification
    return "\n".join([
        f"상대 불변량: {name}" if name else "상대 불변량",
        f"  χ = {report.euler}",
        f"  b1 = {report.b1}, H1 꼬임 = {_torsion_text(report.h1_torsion)}",
        f"  상대 교차형식 = {report.form_matrix} (계수 {c.rank}, 부호수 {c.signature}, "
        f"{c.parity.value}, {c.definiteness.value})",
    ])


def format_verdict(verdict: Verdict, mode: str = "text", names: tuple[str, str] = ("", "")) -> str:
    if mode == "structured":
        return _dump({
            "kind": "verdict",
            "names": list(names),
            "verdict": verdict.value.value,
            "witness": verdict.witness,
            "first": invariant_dict(verdict.first) if verdict.first else None,
            "second": invariant_dict(verdict.second) if verdict.second else None,
        })
    header = f"{names[0]} vs {names[1]}: {verdict.value.value}"
    if verdict.witness:
        header += f" (증거: {verdict.witness})"
    lines = [header]
    if verdict.witness and verdict.first and verdict.witness != "parameters":
        left = getattr(verdict.first, verdict.witness)
        right = getattr(verdict.second, verdict.witness)
        lines.append(f"  {verdict.witness}: {_value_text(left)} != {_value_text(right)}")
    return "\n".join(lines)


def _value_text(value: Any) -> str:
    return value.value if hasattr(value, "value") else str(value)


def format_validation(report: ValidationReport, mode: str = "text", name: str = "") -> str:
    if mode == "structured":
        return _dump({"kind": "validation", "name": name, **validation_dict(report)})
    if report.ok:
        return f"{name}: 유효한 도표"
    lines = [f"{name}: 검증 실패 ({len(report.violations)}건)"]
    lines += [f"  [{v.kind.value}] {v.message}" for v in report.violations]
    return "\n".join(lines)


def format_handles(summary: HandleSummary, mode: str = "text") -> str:
    if mode == "structured":
        return _dump({
            "kind": "handles",
            "two_handle_count": summary.two_handle_count,
            "four_handle_count": summary.four_handle_count,
            "attaching_classes": [list(c) for c in summary.attaching_classes],
        })
    lines = [f"# 2-핸들 {summary.two_handle_count}개, 4-핸들 {summary.four_handle_count}개"]
    lines += [f"#   부착 류 c{i}: {list(c)}" for i, c in enumerate(summary.attaching_classes, start=1)]
    return "\n".join(lines)


def format_audit(report: AuditReport, mode: str = "text") -> str:
    if mode == "structured":
        return _dump({
            "kind": "move_audit",
            "consistent": report.consistent,
            "equations": [
                {"name": eq.name, "expected": eq.expected, "actual": eq.actual}
                for eq in report.equations
            ],
            "defect": report.defect,
            "genus_change": report.genus_change,
        })
    lines = [f"이동열 감사: {'일치' if report.consistent else '불일치'}"]
    for eq in report.equations:
        mark = "=" if eq.holds else "!="
        lines.append(f"  {eq.name}: 예측 {eq.expected} {mark} 실제 {eq.actual}")
    if report.defect is not None:
        lines.append(f"  결손값 1-b-3p = {report.defect}")
    lines.append(f"  종수 변화 = {report.genus_change}")
    return "\n".join(lines)


def format_euler_audits(audits: list[EulerAudit], mode: str = "text") -> str:
    if mode == "structured":
        return _dump({
            "kind": "euler_audit",
            "audits": [
                {
                    "label": a.label,
                    "claimed": list(a.claimed),
                    "claimed_euler": a.claimed_euler,
                    "expected_euler": a.expected_euler,
                    "consistent": a.consistent,
                }
                for a in audits
            ],
        })
    lines = []
    for a in audits:
        status = "일치" if a.consistent else f"불일치 (차이 {a.claimed_euler - a.expected_euler:+d})"
        lines.append(f"{a.label}: χ{a.claimed} = {a.claimed_euler}, 기대 {a.expected_euler} → {status}")
    return "\n".join(lines)


def format_catalog_listing(entries: list[CatalogEntry], mode: str = "text") -> str:
    if mode == "structured":
        return _dump({
            "kind": "catalog",
            "entries": [
                {"name": e.name, "params": list(e.diagram.params.as_tuple()),
                 "provenance": e.provenance.value, "notes": e.notes}
                for e in entries
            ],
        })
    width = max((len(e.name) for e in entries), default=0)
    return "\n".join(
        f"{e.name:<{width}}  {str(e.diagram.params):<14} {e.provenance.value:<15} {e.notes}"
        for e in entries
    )


def format_entry(entry: CatalogEntry, rendered: str, mode: str = "text") -> str:
    if mode == "structured":
        return _dump({
            "kind": "catalog_entry",
            "name": entry.name,
            "provenance": entry.provenance.value,
            "notes": entry.notes,
            "params": list(entry.diagram.params.as_tuple()),
            "diagram": rendered,
        })
    return f"# 출처: {entry.provenance.value}\n# {entry.notes}\n{rendered}"
