"""도표의 연결합과 경계 연결합."""

from __future__ import annotations

import logging

from models.diagram import CurveFamily, Diagram, DiagramParams, SurfaceModel
from models.errors import NonzeroPageError, NotRelativeError, TwoRelativeSummandsError

logger = logging.getLogger(__name__)


def connected_sum_params(left: DiagramParams, right: DiagramParams) -> DiagramParams:
    """내부 연결합의 매개변수 (g+g', k+k'; 상대 쪽의 p, b)."""
    if left.is_relative and right.is_relative:
        raise TwoRelativeSummandsError("두 상대 도표의 내부 연결합은 지원하지 않습니다")
    g, k = left.g + right.g, left.k + right.k
    relative = left if left.is_relative else right if right.is_relative else None
    if relative is None:
        return DiagramParams.closed(g, k)
    return DiagramParams.relative(g, k, relative.p, relative.b)


def boundary_sum_params(left: DiagramParams, right: DiagramParams) -> DiagramParams:
    """경계 연결합의 매개변수 (g+g', k+k'; p+p', b+b'-1)."""
    return DiagramParams.relative(
        left.g + right.g, left.k + right.k, left.p + right.p, left.b + right.b - 1
    )


def connected_sum(left: Diagram, right: Diagram) -> Diagram:
    """내부 연결합. 기저는 왼쪽 쌍, 오른쪽 쌍, 상대 쪽의 c 순서.

    Raises:
        TwoRelativeSummandsError: 두 도표 모두 상대일 때
    """
    params = connected_sum_params(left.params, right.params)
    surface = SurfaceModel(params.g, params.b)
    total = surface.h1_rank

    def embed(summand: Diagram, pair_offset: int):
        own = 2 * summand.surface.genus

        def transform(v: tuple[int, ...]) -> tuple[int, ...]:
            out = [0] * total
            out[2 * pair_offset:2 * pair_offset + own] = v[:own]
            if summand.is_relative:
                out[2 * params.g:] = v[own:]
            return tuple(out)
        return transform

    to_left = embed(left, 0)
    to_right = embed(right, left.surface.genus)
    logger.debug("연결합 %s # %s -> %s", left.name, right.name, params)
    return _merge(f"sum({left.name},{right.name})", surface, params, left, right, to_left, to_right)


def boundary_connected_sum(left: Diagram, right: Diagram) -> Diagram:
    """경계 연결합 (두 도표 모두 p = 0).

    왼쪽의 c_b 와 오른쪽의 c'_1 이 하나의 경계 성분 m = c_b + c'_1 으로
    합쳐집니다. 새 경계 목록은 [c1..c_{b-1}, m, c'_2..c'_{b'}] 이고 마지막
    성분이 소거됩니다.

    Raises:
        NotRelativeError: 닫힌 도표가 주어졌을 때
        NonzeroPageError: 어느 한쪽의 p 가 0이 아닐 때
    """
    for summand in (left, right):
        if not summand.is_relative:
            raise NotRelativeError(f"{summand.name} 은 닫힌 도표라 경계 연결합을 할 수 없습니다")
        if summand.params.p != 0:
            raise NonzeroPageError(
                f"{summand.name} 의 페이지 종수 p={summand.params.p} 가 0이 아닙니다"
            )
    return boundary_sum(left, right)


def boundary_sum(left: Diagram, right: Diagram) -> Diagram:
    """p 검사 없이 경계 연결합을 계산 (I형 안정화에서도 사용)."""
    params = boundary_sum_params(left.params, right.params)
    surface = SurfaceModel(params.g, params.b)
    total = surface.h1_rank
    base = 2 * params.g
    b_left = left.params.b
    own_left = 2 * left.surface.genus
    own_right = 2 * right.surface.genus
    pair_offset = own_left

    def to_left(v: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * total
        out[:own_left] = v[:own_left]
        out[base:base + b_left - 1] = v[own_left:]
        return tuple(out)

    def to_right(v: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * total
        out[pair_offset:pair_offset + own_right] = v[:own_right]
        boundary = v[own_right:]
        if boundary:
            # c'_1 = m - c_b = m + (c_1 + ... + c_{b-1})
            first = boundary[0]
            out[base + b_left - 1] += first
            for i in range(b_left - 1):
                out[base + i] += first
            for j, value in enumerate(boundary[1:], start=2):
                out[base + b_left + j - 2] += value
        return tuple(out)

    logger.debug("경계 연결합 %s ♮ %s -> %s", left.name, right.name, params)
    return _merge(f"bsum({left.name},{right.name})", surface, params, left, right, to_left, to_right)


def _merge(name, surface, params, left, right, to_left, to_right) -> Diagram:
    families = [
        CurveFamily(lf.label, lf.mapped(to_left).members + rf.mapped(to_right).members)
        for lf, rf in zip(left.families, right.families)
    ]
    return Diagram(name, surface, params, *families)
