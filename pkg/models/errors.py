"""삼분할 도표 처리 중 발생하는 예외 정의.

전제조건 위반은 ValueError 계열, 내부 계산 불일치는 RuntimeError 계열로
구분합니다. CLI는 이 구분을 종료 코드로 변환합니다.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from models.reports import ValidationReport


class TrisectionError(Exception):
    """이 패키지의 모든 예외의 기반 클래스."""


class ShapeError(TrisectionError, ValueError):
    """곡선 벡터 길이가 H1 계수(rank)와 맞지 않음."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}행 {column or 1}열: {message}"
        super().__init__(message)


class ParseError(TrisectionError, ValueError):
    """.td 파일 구문 오류 (행/열 정보 포함)."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"{line}행 {column}열: {message}")


class ValidationError(TrisectionError, ValueError):
    """--strict 모드에서 검증에 실패한 도표."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        kinds = ", ".join(v.kind.value for v in report.violations)
        super().__init__(f"도표 검증 실패: {kinds}")


class SelfSlideError(TrisectionError, ValueError):
    """곡선을 자기 자신 위로 미끄러뜨리려 함 (i == j)."""


class BadIndexError(TrisectionError, ValueError):
    """곡선 또는 경계 성분 인덱스가 범위를 벗어남."""


class NotRelativeError(TrisectionError, ValueError):
    """상대 도표가 필요한 연산에 닫힌 도표가 주어짐."""


class NotClosedError(TrisectionError, ValueError):
    """닫힌 도표가 필요한 연산에 상대 도표가 주어짐."""


class PageGenusNonzeroError(TrisectionError, ValueError):
    """페이지 종수 p가 0이 아니어서 캡핑할 수 없음."""


class LastBoundaryError(TrisectionError, ValueError):
    """경계 성분이 하나뿐이라 성분 단위 캡핑이 불가능함 (cap_all 사용)."""


class TwoRelativeSummandsError(TrisectionError, ValueError):
    """두 상대 도표의 내부 연결합은 정의되지 않음."""


class NonzeroPageError(TrisectionError, ValueError):
    """경계 연결합은 두 도표 모두 p = 0 일 때만 지원함."""


class WindowViolationError(TrisectionError, ValueError):
    """매개변수가 허용 범위 2p+b-1 <= k <= g+p+b-1 를 벗어남."""


class UnsupportedMoveError(TrisectionError, ValueError):
    """도표 수준에서 지원하지 않는 이동 (역안정화 등)."""


class NotInSpanError(TrisectionError, ValueError):
    """벡터가 주어진 기저의 유리 생성공간에 속하지 않음."""


class UnknownNameError(TrisectionError, KeyError):
    """카탈로그에 없는 이름."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "알 수 없는 이름"


class InternalInconsistencyError(TrisectionError, RuntimeError):
    """계산 결과의 사후조건 불일치. 조용히 반환하지 않고 중단함."""
