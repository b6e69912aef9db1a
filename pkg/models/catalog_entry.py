from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from models.diagram import Diagram, DiagramParams
from models.reports import Parity


class Provenance(Enum):
    """카탈로그 항목 출처."""
    EXACT = "exact"                    # 표준 도표 그대로
    RECONSTRUCTION = "reconstruction"  # 그림/서술로부터 호몰로지 수준 재구성
    USER = "user"                      # 사용자 카탈로그 디렉토리에서 읽음


@dataclass(frozen=True)
class ExpectedClosed:
    """캡핑(또는 닫힌 도표 자체)의 기대 불변량."""
    b2: int
    signature: int
    parity: Parity
    b1: int = 0


@dataclass(frozen=True)
class ExpectedRelative:
    """상대 도표에서 직접 읽는 기대값."""
    b1: int
    form: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    diagram: Diagram
    provenance: Provenance
    notes: str = ""
    expected_params: Optional[DiagramParams] = None
    expected_closed: Optional[ExpectedClosed] = None
    expected_relative: Optional[ExpectedRelative] = None
    cap_equals: Optional[str] = None   # 캡핑 결과가 정확히 같아야 하는 항목 이름
