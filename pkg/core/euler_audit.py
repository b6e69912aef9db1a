"""매개변수 주장의 오일러 지표 감사.

주장된 매개변수와 실제 연산이 만드는 매개변수를 오일러 지표의
가법성으로 대조합니다. 경계 연결합은 χ(L) + χ(R) - 1, 닫힌 도표와 상대
도표의 내부 연결합은 χ(C) + χ(R) - 2 입니다.
"""

from __future__ import annotations

import logging

from core.catalog import hopf_band, trivial
from core.gluing import boundary_sum_params, connected_sum_params
from core.validator import euler_characteristic
from models.diagram import DiagramParams
from models.reports import EulerAudit

logger = logging.getLogger(__name__)


def expected_euler_boundary_sum(left: DiagramParams, right: DiagramParams) -> int:
    return euler_characteristic(left) + euler_characteristic(right) - 1


def expected_euler_connected_sum(closed: DiagramParams, relative: DiagramParams) -> int:
    return euler_characteristic(closed) + euler_characteristic(relative) - 2


def audit_euler_claim(label: str, claimed: DiagramParams, expected_euler: int, note: str = "") -> EulerAudit:
    """주장된 매개변수의 오일러 지표가 기대값과 같은지 기록."""
    audit = EulerAudit(
        label=label,
        claimed=claimed.as_tuple(),
        claimed_euler=euler_characteristic(claimed),
        expected_euler=expected_euler,
        note=note,
    )
    if not audit.consistent:
        logger.info(
            "오일러 지표 불일치 %s: 주장 %s 의 χ=%d, 기대 χ=%d",
            label, claimed, audit.claimed_euler, expected_euler,
        )
    return audit


def hopf_sum_audits(params: DiagramParams) -> list[EulerAudit]:
    """W ♮ D± 에 대해 주장된 (g+1, k; 0, b+1) 과 구현된 매개변수를 감사."""
    hopf = hopf_band(1).params
    expected = expected_euler_boundary_sum(params, hopf)
    printed = DiagramParams.relative(params.g + 1, params.k, 0, params.b + 1)
    implemented = boundary_sum_params(params, hopf)
    return [
        audit_euler_claim(f"{params} ♮ D± (주장)", printed, expected, "k 가 그대로인 주장"),
        audit_euler_claim(f"{params} ♮ D± (구현)", implemented, expected, "k+k' 규칙"),
    ]


def trivial_sum_audits(params: DiagramParams, n: int) -> list[EulerAudit]:
    """닫힌 X # TRIVIAL(n+1) 에 대해 주장된 (g, k; 0, n+1) 과 구현된 매개변수를 감사."""
    other = trivial(n + 1).params
    expected = expected_euler_connected_sum(params, other)
    printed = DiagramParams.relative(params.g, params.k, 0, n + 1)
    implemented = connected_sum_params(params, other)
    return [
        audit_euler_claim(f"{params} # TRIVIAL({n + 1}) (주장)", printed, expected, "k 가 그대로인 주장"),
        audit_euler_claim(f"{params} # TRIVIAL({n + 1}) (구현)", implemented, expected, "k+n 규칙"),
    ]


def claim_audits(params: DiagramParams, n: int = 1) -> list[EulerAudit]:
    """매개변수 종류에 맞는 감사 목록. 상대 p = 0 이면 호프 띠 합, 닫힌 경우 자명 도표 합."""
    if params.is_relative:
        return hopf_sum_audits(params) if params.p == 0 else []
    return trivial_sum_audits(params, n)
