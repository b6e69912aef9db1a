"""핸들 미끄러뜨리기(handleslide).

같은 족 안에서 곡선 i 를 곡선 j 위로 미끄러뜨리면 호몰로지 류가
v_i -> v_i ± v_j 로 바뀝니다. 족이 생성하는 격자는 그대로이므로
검증 결과와 모든 불변량이 보존됩니다.
"""

from __future__ import annotations

import logging
import random

from models.diagram import Diagram, FamilyLabel
from models.errors import BadIndexError, SelfSlideError

logger = logging.getLogger(__name__)


def slide(diagram: Diagram, label: FamilyLabel | str, i: int, j: int, sign: int = 1) -> Diagram:
    """족 label 의 곡선 i 를 곡선 j 위로 미끄러뜨린 새 도표 (인덱스는 0부터).

    Raises:
        SelfSlideError: i == j
        BadIndexError: 인덱스가 범위 밖
        ValueError: sign 이 ±1 이 아님
    """
    label = FamilyLabel(label)
    family = diagram.family(label)
    if sign not in (1, -1):
        raise ValueError(f"sign 은 +1 또는 -1 이어야 합니다: {sign}")
    for idx in (i, j):
        if not 0 <= idx < len(family):
            raise BadIndexError(f"{label.value} 인덱스 {idx} 는 0..{len(family) - 1} 범위 밖입니다")
    if i == j:
        raise SelfSlideError(f"{label.value}[{i}] 를 자기 자신 위로 미끄러뜨릴 수 없습니다")

    moved = family[i] + family[j] if sign == 1 else family[i] - family[j]
    return diagram.with_family(family.with_member(i, moved))


def random_slides(diagram: Diagram, rng: random.Random, count: int) -> Diagram:
    """임의의 핸들 미끄러뜨리기를 count 번 적용. 곡선이 2개 미만인 족은 건너뜀."""
    candidates = [label for label in FamilyLabel if len(diagram.family(label)) >= 2]
    if not candidates:
        return diagram
    for _ in range(count):
        label = rng.choice(candidates)
        size = len(diagram.family(label))
        i, j = rng.sample(range(size), 2)
        diagram = slide(diagram, label, i, j, rng.choice((1, -1)))
    logger.debug("%s 에 임의 미끄러뜨리기 %d회 적용", diagram.name, count)
    return diagram
