"""검증/불변량/감사 결과 데이터 모델."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from models.integer_matrix import IntegerMatrix


# ── 검증 ──

class ViolationKind(Enum):
    SURFACE_MISMATCH = "surface_mismatch"     # 곡면과 매개변수 불일치
    WINDOW = "window"                         # 허용 범위 위반
    FAMILY_SIZE = "family_size"               # 곡선 수 불일치
    NOT_ISOTROPIC = "not_isotropic"           # 족 내 교차수가 0이 아님
    DEPENDENT = "dependent"                   # 유리 일차종속 (0 류 포함)
    NOT_HEEGAARD = "not_heegaard"             # 쌍의 여핵이 Z^k 가 아님


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str
    family: Optional[str] = None        # 관련 족 (쌍이면 "alpha/beta")


@dataclass(frozen=True)
class ValidationReport:
    """검증 결과. ok 는 위반이 없을 때만 참."""
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}


# ── 불변량 ──

class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


class Definiteness(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INDEFINITE = "indefinite"
    ZERO = "zero"               # 0차원 형식
    DEGENERATE = "degenerate"   # 퇴화 형식 (상대 경우에만)


@dataclass(frozen=True)
class FormClassification:
    rank: int
    signature: int
    parity: Parity
    definiteness: Definiteness


@dataclass(frozen=True)
class HomologyReport:
    euler: int
    b1: int
    h1_torsion: tuple[int, ...]
    b2: int
    b3: int


@dataclass(frozen=True)
class InvariantReport:
    """닫힌 4-다양체의 불변량. form_matrix 는 표준 기저에서의 교차형식."""
    euler: int
    b1: int
    h1_torsion: tuple[int, ...]
    b2: int
    b3: int
    form_matrix: IntegerMatrix
    signature: int
    parity: Parity
    definiteness: Definiteness


@dataclass(frozen=True)
class RelativeReport:
    """상대 도표에서 직접 읽는 호몰로지 정보 (캡핑 없이)."""
    euler: int
    b1: int
    h1_torsion: tuple[int, ...]
    form_matrix: IntegerMatrix
    classification: FormClassification


class VerdictValue(Enum):
    DISTINCT = "DISTINCT"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Verdict:
    value: VerdictValue
    witness: Optional[str] = None       # 처음 달라진 항목 이름
    first: Optional[InvariantReport] = None
    second: Optional[InvariantReport] = None

    @property
    def is_distinct(self) -> bool:
        return self.value is VerdictValue.DISTINCT


# ── 핸들 / 안정화 ──

@dataclass(frozen=True)
class HandleSummary:
    """캡핑으로 추가된 핸들 정보."""
    two_handle_count: int
    four_handle_count: int
    attaching_classes: tuple[tuple[int, ...], ...] = ()


class StabilizationKind(Enum):
    TYPE_I = "I"
    TYPE_II = "II"


class MoveDirection(Enum):
    STABILIZE = "stabilize"
    DESTABILIZE = "destabilize"


_DELTAS = {
    StabilizationKind.TYPE_I: (1, 1, 0, 1),
    StabilizationKind.TYPE_II: (2, 1, 1, -1),
}


@dataclass(frozen=True)
class StabilizationMove:
    kind: StabilizationKind
    direction: MoveDirection = MoveDirection.STABILIZE

    @property
    def delta(self) -> tuple[int, int, int, int]:
        """(dg, dk, dp, db)."""
        base = _DELTAS[self.kind]
        sign = 1 if self.direction is MoveDirection.STABILIZE else -1
        return tuple(sign * d for d in base)

    def __str__(self) -> str:
        prefix = "" if self.direction is MoveDirection.STABILIZE else "de"
        return f"{prefix}stab-{self.kind.value}"


@dataclass(frozen=True)
class MoveSequence:
    """각 이동의 횟수 (l: I형, m: II형)."""
    l_plus: int = 0
    l_minus: int = 0
    m_plus: int = 0
    m_minus: int = 0

    def __post_init__(self):
        if min(self.l_plus, self.l_minus, self.m_plus, self.m_minus) < 0:
            raise ValueError("이동 횟수는 음수일 수 없습니다")

    @property
    def delta(self) -> tuple[int, int, int, int]:
        l = self.l_plus - self.l_minus
        m = self.m_plus - self.m_minus
        return (l + 2 * m, l + m, m, l - m)


@dataclass(frozen=True)
class AuditEquation:
    name: str
    expected: int
    actual: int

    @property
    def holds(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class AuditReport:
    consistent: bool
    equations: tuple[AuditEquation, ...] = ()
    defect: Optional[int] = None           # 끝이 (p,b) = (0,1) 일 때 1 - b - 3p
    genus_change: int = 0


@dataclass(frozen=True)
class EulerAudit:
    """매개변수 주장의 오일러 지표 검사."""
    label: str
    claimed: tuple[int, ...]
    claimed_euler: int
    expected_euler: int
    note: str = field(default="", compare=False)

    @property
    def consistent(self) -> bool:
        return self.claimed_euler == self.expected_euler
