"""상대 안정화(I형/II형)와 이동열 감사.

I형 안정화는 호프 띠 단일도형(DPLUS/DMINUS)과의 경계 연결합이고,
II형 안정화는 서로 다른 두 경계 성분을 잇는 띠를 붙여 페이지 종수를
하나 올립니다. 매개변수 변화는 각각 (+1,+1,0,+1), (+2,+1,+1,-1) 입니다.
"""

from __future__ import annotations

import logging
from typing import Iterable

from core.catalog import hopf_band
from core.gluing import boundary_sum
from core.validator import window_violations
from models.diagram import CurveClass, CurveFamily, Diagram, DiagramParams, SurfaceModel
from models.errors import UnsupportedMoveError, WindowViolationError
from models.reports import (
    AuditEquation,
    AuditReport,
    MoveDirection,
    MoveSequence,
    StabilizationKind,
    StabilizationMove,
)

logger = logging.getLogger(__name__)


def stabilize(params: DiagramParams, move: StabilizationMove) -> DiagramParams:
    """매개변수에 안정화/역안정화를 적용.

    Raises:
        WindowViolationError: 닫힌 매개변수이거나 결과가 허용 범위를 벗어날 때
    """
    if not params.is_relative:
        raise WindowViolationError(f"상대 매개변수가 아닙니다: {params}")
    dg, dk, dp, db = move.delta
    g, k, p, b = params.g + dg, params.k + dk, params.p + dp, params.b + db
    if min(g, k, p) < 0 or b < 1:
        raise WindowViolationError(f"{move} 적용 불가: {params} -> ({g},{k};{p},{b})")
    result = DiagramParams.relative(g, k, p, b)
    problems = window_violations(result)
    if problems:
        raise WindowViolationError(f"{move} 적용 결과가 범위를 벗어납니다: {'; '.join(problems)}")
    return result


def apply_moves(
    start: DiagramParams, moves: Iterable[StabilizationMove]
) -> tuple[DiagramParams, MoveSequence]:
    """이동을 차례로 적용하고 (끝 매개변수, 횟수 집계) 를 돌려줍니다."""
    counts = {(kind, direction): 0 for kind in StabilizationKind for direction in MoveDirection}
    params = start
    for move in moves:
        params = stabilize(params, move)
        counts[(move.kind, move.direction)] += 1
    sequence = MoveSequence(
        l_plus=counts[(StabilizationKind.TYPE_I, MoveDirection.STABILIZE)],
        l_minus=counts[(StabilizationKind.TYPE_I, MoveDirection.DESTABILIZE)],
        m_plus=counts[(StabilizationKind.TYPE_II, MoveDirection.STABILIZE)],
        m_minus=counts[(StabilizationKind.TYPE_II, MoveDirection.DESTABILIZE)],
    )
    return params, sequence


def audit_move_sequence(
    start: DiagramParams, sequence: MoveSequence, end: DiagramParams
) -> AuditReport:
    """이동 횟수가 시작/끝 매개변수 차이와 맞는지 감사.

    끝이 (p, b) = (0, 1) 이면 결손값 1 - b - 3p (시작 기준) 와 종수 변화
    l+ + 2m+ - l- - 2m- 를 함께 보고합니다.
    """
    dg, dk, dp, db = sequence.delta
    equations = (
        AuditEquation("g", start.g + dg, end.g),
        AuditEquation("k", start.k + dk, end.k),
        AuditEquation("p", start.p + dp, end.p),
        AuditEquation("b", start.b + db, end.b),
    )
    consistent = all(eq.holds for eq in equations)
    defect = None
    if (end.p, end.b) == (0, 1):
        defect = 1 - start.b - 3 * start.p
    report = AuditReport(consistent=consistent, equations=equations, defect=defect, genus_change=dg)
    if not consistent:
        logger.info("이동열 감사 불일치: %s -> %s, delta=%s", start, end, sequence.delta)
    return report


def stabilize_diagram(diagram: Diagram, move: StabilizationMove, sign: int = 1) -> Diagram:
    """도표 수준 안정화.

    I형은 마지막 경계 성분을 따라 부호 sign 의 호프 띠 도표와 경계 연결합,
    II형은 경계 성분 b-1, b 를 띠로 이어 옛 c_{b-1} 을 새 a_{g+1} 로,
    옛 c_b 를 (새 소거 성분) - a_{g+1} 로 보낸 뒤 새 쌍 (a_{g+2}, b_{g+2}) 에
    곡선 a, b, a ± b 를 하나씩 추가합니다.

    Raises:
        UnsupportedMoveError: 역안정화 요청
        WindowViolationError: 매개변수 범위 위반 (II형은 b >= 2 필요)
    """
    if move.direction is MoveDirection.DESTABILIZE:
        raise UnsupportedMoveError("도표 수준의 역안정화는 지원하지 않습니다")
    params = stabilize(diagram.params, move)
    if move.kind is StabilizationKind.TYPE_I:
        result = boundary_sum(diagram, hopf_band(sign))
    else:
        result = _band_stabilize(diagram, params, sign)
    logger.info("%s 안정화 %s: %s -> %s", diagram.name, move, diagram.params, result.params)
    return result.renamed(f"stab{move.kind.value}({diagram.name})")


def _band_stabilize(diagram: Diagram, params: DiagramParams, sign: int) -> Diagram:
    if sign not in (1, -1):
        raise ValueError(f"sign 은 +1 또는 -1 이어야 합니다: {sign}")
    g, b = diagram.params.g, diagram.params.b
    surface = SurfaceModel(params.g, params.b)
    total = surface.h1_rank
    old_base = 2 * g
    new_base = 2 * params.g

    def transform(v: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * total
        out[:old_base] = v[:old_base]
        out[old_base] = v[old_base + b - 2]
        for i in range(b - 2):
            out[new_base + i] = v[old_base + i]
        return tuple(out)

    def unit(*terms: tuple[int, int]) -> CurveClass:
        coords = [0] * total
        for index, value in terms:
            coords[index] = value
        return CurveClass(tuple(coords))

    a_new, b_new = 2 * g + 2, 2 * g + 3
    extra = {
        "alpha": unit((a_new, 1)),
        "beta": unit((b_new, 1)),
        "gamma": unit((a_new, 1), (b_new, sign)),
    }
    families = [
        CurveFamily(fam.label, fam.mapped(transform).members + (extra[fam.label.value],))
        for fam in diagram.families
    ]
    return Diagram(diagram.name, surface, params, *families)
