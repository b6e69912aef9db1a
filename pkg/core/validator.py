"""삼분할 도표 검증 모듈.

곡선 족의 크기, 족 내 등방성(isotropy), 유리 일차독립성, 매개변수 허용
범위, 각 족 쌍의 호몰로지 헤가드 조건(여핵이 정확히 Z^k)을 검사합니다.
위반은 예외가 아니라 ValidationReport 로 모아 돌려줍니다.
"""

from __future__ import annotations

import logging

from models.diagram import CurveFamily, Diagram, DiagramParams
from models.errors import ShapeError
from models.reports import ValidationReport, Violation, ViolationKind
from core.linalg import cokernel_invariants, matrix_rank

logger = logging.getLogger(__name__)


def euler_characteristic(params: DiagramParams) -> int:
    """매개변수로부터 오일러 지표.

    닫힌 경우 χ = 2 + g - 3k, 상대 경우 χ = g - 3k + 3p + 2b - 1.
    """
    if params.is_relative:
        return params.g - 3 * params.k + 3 * params.p + 2 * params.b - 1
    return 2 + params.g - 3 * params.k


def window_violations(params: DiagramParams) -> list[str]:
    """매개변수 허용 범위 위반 메시지 목록 (비어 있으면 통과)."""
    g, k, p, b = params.g, params.k, params.p, params.b
    problems = []
    if min(g, k, p, b) < 0:
        problems.append(f"음수 매개변수 {params}")
        return problems
    if params.is_relative:
        low, high = 2 * p + b - 1, g + p + b - 1
        if not low <= k <= high:
            problems.append(f"k={k} 가 범위 [{low}, {high}] 밖입니다 {params}")
    else:
        if p != 0:
            problems.append(f"닫힌 도표의 p 는 0이어야 합니다 {params}")
        if k > g:
            problems.append(f"k={k} 가 g={g} 보다 큽니다")
    return problems


def ensure_shape(diagram: Diagram) -> None:
    """모든 곡선 벡터 길이가 H1 계수와 같은지 확인.

    Raises:
        ShapeError: 길이가 다른 벡터가 있을 때
    """
    dim = diagram.surface.h1_rank
    for family in diagram.families:
        for idx, curve in enumerate(family):
            if len(curve) != dim:
                raise ShapeError(
                    f"{family.label.value}[{idx}] 길이 {len(curve)} != H1 계수 {dim} "
                    f"({diagram.surface})"
                )


def validate_diagram(diagram: Diagram) -> ValidationReport:
    """도표가 주어진 매개변수의 (상대) 삼분할 도표 조건을 만족하는지 검사.

    Args:
        diagram: 검사할 도표

    Returns:
        ValidationReport (ok 는 위반이 없을 때만 참)

    Raises:
        ShapeError: 곡선 벡터 길이가 맞지 않을 때
    """
    ensure_shape(diagram)
    violations: list[Violation] = []

    # 1) 곡면/매개변수 일치
    _check_surface(diagram, violations)

    # 2) 허용 범위
    for message in window_violations(diagram.params):
        violations.append(Violation(ViolationKind.WINDOW, message))

    # 3) 족별 검사
    for family in diagram.families:
        _check_family(diagram, family, violations)

    # 4) 쌍별 헤가드 조건
    families = diagram.families
    for i in range(3):
        for j in range(i + 1, 3):
            _check_pair(diagram, families[i], families[j], violations)

    report = ValidationReport(violations=tuple(violations))
    logger.debug("검증 %s: %d건 위반", diagram.name, len(violations))
    return report


# ─── 개별 검사 함수 ──────────────────────────────────────────


def _check_surface(diagram: Diagram, violations: list[Violation]) -> None:
    surface, params = diagram.surface, diagram.params
    if surface.genus != params.g or surface.boundary_count != params.b:
        violations.append(Violation(
            ViolationKind.SURFACE_MISMATCH,
            f"곡면 {surface} 과 매개변수 {params} 가 맞지 않습니다",
        ))


def _check_family(diagram: Diagram, family: CurveFamily, violations: list[Violation]) -> None:
    name = family.label.value
    expected = diagram.params.family_size
    if len(family) != expected:
        violations.append(Violation(
            ViolationKind.FAMILY_SIZE,
            f"{name} 곡선 수 {len(family)} != {expected}",
            family=name,
        ))

    surface = diagram.surface
    members = family.matrix(diagram.dim)
    gram = members.transpose() @ surface.pairing_matrix() @ members
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if gram[i, j] != 0:
                violations.append(Violation(
                    ViolationKind.NOT_ISOTROPIC,
                    f"<{name}{i + 1}, {name}{j + 1}> = {gram[i, j]}",
                    family=name,
                ))

    zero = [i for i, member in enumerate(family) if member.is_zero]
    for i in zero:
        violations.append(Violation(
            ViolationKind.DEPENDENT, f"{name}{i + 1} 이 0 류입니다", family=name,
        ))
    if not zero and len(family) and matrix_rank(members) < len(family):
        violations.append(Violation(
            ViolationKind.DEPENDENT,
            f"{name} 곡선이 유리수 위에서 일차종속입니다",
            family=name,
        ))


def _check_pair(
    diagram: Diagram, first: CurveFamily, second: CurveFamily, violations: list[Violation]
) -> None:
    pair = f"{first.label.value}/{second.label.value}"
    combined = first.matrix(diagram.dim).hstack(second.matrix(diagram.dim))
    free_rank, torsion = cokernel_invariants(combined)
    k = diagram.params.k
    if torsion:
        violations.append(Violation(
            ViolationKind.NOT_HEEGAARD,
            f"{pair} 여핵에 꼬임 {list(torsion)} 이 있습니다",
            family=pair,
        ))
    if free_rank != k:
        violations.append(Violation(
            ViolationKind.NOT_HEEGAARD,
            f"{pair} 여핵 계수 {free_rank} != k={k}",
            family=pair,
        ))
