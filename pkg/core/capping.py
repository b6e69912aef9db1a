"""경계 캡핑: 페이지 종수 0인 상대 도표를 닫힌 도표로 만듭니다.

경계 성분 하나를 캡핑하면 해당 c 좌표가 H1 에서 사라지고 (2-핸들 하나를
붙이는 것에 해당), 마지막 경계 성분까지 캡핑하면 4-핸들 하나가 추가되어
닫힌 4-다양체의 도표가 됩니다.
"""

from __future__ import annotations

import logging
from typing import Callable

from models.diagram import Diagram, DiagramParams, SurfaceModel
from models.errors import (
    BadIndexError,
    LastBoundaryError,
    NotRelativeError,
    PageGenusNonzeroError,
)
from models.reports import HandleSummary

logger = logging.getLogger(__name__)

Projection = Callable[[tuple[int, ...]], tuple[int, ...]]


def _require_cappable(diagram: Diagram) -> None:
    if not diagram.is_relative:
        raise NotRelativeError(f"{diagram.name} 은 닫힌 도표라 캡핑할 수 없습니다")
    params = diagram.params
    if params.p != 0:
        raise PageGenusNonzeroError(
            f"{diagram.name} 의 페이지 종수 p={params.p} 가 0이 아닙니다: "
            f"각 족의 곡선 수 g-p={params.g - params.p} < g={params.g} 이므로 "
            "원판을 붙여도 닫힌 도표가 되지 않습니다"
        )


def _project(
    diagram: Diagram, surface: SurfaceModel, params: DiagramParams,
    projection: Projection, name: str,
) -> Diagram:
    return Diagram(
        name=name,
        surface=surface,
        params=params,
        alpha=diagram.alpha.mapped(projection),
        beta=diagram.beta.mapped(projection),
        gamma=diagram.gamma.mapped(projection),
    )


def cap_component(diagram: Diagram, component: int) -> Diagram:
    """경계 성분 하나(1..b)를 원판으로 캡핑. 결과 매개변수 (g, k-1; 0, b-1).

    c_i (i < b) 를 캡핑하면 해당 좌표를 지웁니다. 소거된 c_b 를 캡핑하면
    c_{b-1} 이 새 소거 성분이 되도록 좌표를 x_j - x_{b-1} 로 바꿉니다.

    Raises:
        NotRelativeError, PageGenusNonzeroError, LastBoundaryError, BadIndexError
    """
    _require_cappable(diagram)
    g, k, _, b = diagram.params.g, diagram.params.k, diagram.params.p, diagram.params.b
    if b == 1:
        raise LastBoundaryError(f"{diagram.name} 의 경계 성분이 하나뿐입니다 (cap_all 사용)")
    if not 1 <= component <= b:
        raise BadIndexError(f"경계 성분 {component} 는 1..{b} 범위 밖입니다")

    offset = 2 * g
    if component < b:
        drop = offset + component - 1

        def projection(v: tuple[int, ...]) -> tuple[int, ...]:
            return v[:drop] + v[drop + 1:]
    else:
        last = offset + b - 2

        def projection(v: tuple[int, ...]) -> tuple[int, ...]:
            return v[:offset] + tuple(v[offset + j] - v[last] for j in range(b - 2))

    logger.debug("%s: 경계 성분 %d 캡핑", diagram.name, component)
    return _project(
        diagram,
        SurfaceModel(g, b - 1),
        DiagramParams.relative(g, k - 1, 0, b - 1),
        projection,
        f"cap{component}({diagram.name})",
    )


def close_single_boundary(diagram: Diagram) -> Diagram:
    """경계 성분이 하나인 도표를 닫힌 도표로 (4-핸들 추가). 좌표는 그대로."""
    _require_cappable(diagram)
    params = diagram.params
    if params.b != 1:
        raise BadIndexError(f"경계 성분이 {params.b}개입니다 (1개여야 함)")
    return _project(
        diagram,
        SurfaceModel(params.g, 0),
        DiagramParams.closed(params.g, params.k),
        lambda v: v,
        f"cap({diagram.name})",
    )


def cap_all(diagram: Diagram) -> tuple[Diagram, HandleSummary]:
    """모든 경계 성분을 캡핑하여 닫힌 도표 (g, k-b+1) 를 만듭니다.

    c 좌표를 모두 지우며, 이는 cap_component(1) 을 b-1 번 적용한 뒤
    close_single_boundary 를 적용한 결과와 같습니다.

    Returns:
        (닫힌 도표, HandleSummary(2-핸들 b-1 개, 4-핸들 1개, 부착 류 c1..c_{b-1}))

    Raises:
        NotRelativeError, PageGenusNonzeroError
    """
    _require_cappable(diagram)
    params = diagram.params
    g, b = params.g, params.b
    closed = _project(
        diagram,
        SurfaceModel(g, 0),
        DiagramParams.closed(g, params.k - b + 1),
        lambda v: v[:2 * g],
        f"cap({diagram.name})",
    )
    summary = HandleSummary(
        two_handle_count=b - 1,
        four_handle_count=1,
        attaching_classes=tuple(diagram.surface.boundary_class(i) for i in range(1, b)),
    )
    logger.info("%s 캡핑 완료: %s -> %s", diagram.name, params, closed.params)
    return closed, summary
