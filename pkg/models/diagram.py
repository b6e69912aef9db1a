from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterator, Optional, Sequence

from models.integer_matrix import IntegerMatrix


class FamilyLabel(Enum):
    """곡선 족 라벨."""
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


@dataclass(frozen=True)
class SurfaceModel:
    """곡면 Σ_{g,b} 와 H1 기저 a1,b1,…,ag,bg,c1…c_{b-1}.

    c_b 는 -(c1+…+c_{b-1}) 로 소거되어 좌표에 나타나지 않습니다.
    교차쌍은 (a,b) 블록에서 심플렉틱, c 들과는 0입니다.
    """
    genus: int
    boundary_count: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError(f"곡면 매개변수가 음수입니다: g={self.genus}, b={self.boundary_count}")

    @property
    def boundary_rank(self) -> int:
        return max(self.boundary_count - 1, 0)

    @property
    def h1_rank(self) -> int:
        return 2 * self.genus + self.boundary_rank

    @property
    def is_closed(self) -> bool:
        return self.boundary_count == 0

    def pairing(self, x: Sequence, y: Sequence) -> int:
        """대수적 교차수 <x, y> (<a_i, b_i> = 1). 유리수 벡터도 허용."""
        total = 0
        for i in range(self.genus):
            total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
        return total

    def pairing_matrix(self) -> IntegerMatrix:
        n = self.h1_rank
        entries = [0] * (n * n)
        for i in range(self.genus):
            entries[(2 * i) * n + 2 * i + 1] = 1
            entries[(2 * i + 1) * n + 2 * i] = -1
        return IntegerMatrix(n, n, tuple(entries))

    def boundary_class(self, component: int) -> tuple[int, ...]:
        """경계 성분 c_component (1부터) 의 좌표."""
        if not 1 <= component <= self.boundary_count:
            raise IndexError(f"경계 성분 {component} 는 1..{self.boundary_count} 범위 밖입니다")
        coords = [0] * self.h1_rank
        offset = 2 * self.genus
        if component < self.boundary_count:
            coords[offset + component - 1] = 1
        else:
            for i in range(self.boundary_rank):
                coords[offset + i] = -1
        return tuple(coords)

    def basis_labels(self) -> list[str]:
        labels = []
        for i in range(1, self.genus + 1):
            labels += [f"a{i}", f"b{i}"]
        labels += [f"c{i}" for i in range(1, self.boundary_count)]
        return labels

    def __str__(self) -> str:
        return f"Σ_{self.genus}" if self.is_closed else f"Σ_{{{self.genus},{self.boundary_count}}}"


@dataclass(frozen=True)
class CurveClass:
    """H1(Σ) 안의 정수 호몰로지 류."""
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(v) for v in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    def __add__(self, other: CurveClass) -> CurveClass:
        return CurveClass(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: CurveClass) -> CurveClass:
        return CurveClass(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> CurveClass:
        return CurveClass(tuple(-x for x in self.coords))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class CurveFamily:
    """순서가 있는 곡선 족."""
    label: FamilyLabel
    members: tuple[CurveClass, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "members",
            tuple(m if isinstance(m, CurveClass) else CurveClass(tuple(m)) for m in self.members),
        )

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[CurveClass]:
        return iter(self.members)

    def __getitem__(self, index: int) -> CurveClass:
        return self.members[index]

    def matrix(self, dim: int) -> IntegerMatrix:
        """곡선 류를 열로 하는 dim x n 행렬."""
        return IntegerMatrix.from_columns([m.coords for m in self.members], dim)

    def with_member(self, index: int, curve: CurveClass) -> CurveFamily:
        members = list(self.members)
        members[index] = curve
        return CurveFamily(self.label, tuple(members))

    def mapped(self, transform) -> CurveFamily:
        return CurveFamily(self.label, tuple(CurveClass(transform(m.coords)) for m in self.members))


@dataclass(frozen=True)
class DiagramParams:
    """삼분할 매개변수. 닫힌 경우 (g,k), 상대 경우 (g,k;p,b)."""
    g: int
    k: int
    p: int = 0
    b: int = 0

    @classmethod
    def closed(cls, g: int, k: int) -> DiagramParams:
        return cls(g, k, 0, 0)

    @classmethod
    def relative(cls, g: int, k: int, p: int, b: int) -> DiagramParams:
        return cls(g, k, p, b)

    @property
    def is_relative(self) -> bool:
        return self.b >= 1

    @property
    def family_size(self) -> int:
        """각 족의 곡선 수 (닫힌 g, 상대 g-p)."""
        return self.g - self.p if self.is_relative else self.g

    @property
    def n(self) -> Optional[int]:
        """상대 경우 n = k - 2p - b + 1."""
        return self.k - 2 * self.p - self.b + 1 if self.is_relative else None

    def as_tuple(self) -> tuple[int, ...]:
        return (self.g, self.k, self.p, self.b) if self.is_relative else (self.g, self.k)

    def __str__(self) -> str:
        if self.is_relative:
            return f"({self.g},{self.k};{self.p},{self.b})"
        return f"({self.g},{self.k})"


@dataclass(frozen=True)
class Diagram:
    """(상대) 삼분할 도표. 이름은 동등 비교에서 제외됩니다."""
    name: str = field(compare=False)
    surface: SurfaceModel
    params: DiagramParams
    alpha: CurveFamily
    beta: CurveFamily
    gamma: CurveFamily

    @property
    def families(self) -> tuple[CurveFamily, CurveFamily, CurveFamily]:
        return (self.alpha, self.beta, self.gamma)

    def family(self, label: FamilyLabel) -> CurveFamily:
        return {FamilyLabel.ALPHA: self.alpha, FamilyLabel.BETA: self.beta,
                FamilyLabel.GAMMA: self.gamma}[label]

    def with_family(self, family: CurveFamily) -> Diagram:
        return replace(self, **{family.label.value: family})

    def renamed(self, name: str) -> Diagram:
        return replace(self, name=name)

    @property
    def is_relative(self) -> bool:
        return self.params.is_relative

    @property
    def dim(self) -> int:
        return self.surface.h1_rank

    def all_curves(self) -> IntegerMatrix:
        """세 족의 모든 곡선을 열로 모은 행렬."""
        columns = [m.coords for fam in self.families for m in fam]
        return IntegerMatrix.from_columns(columns, self.dim)


def build_diagram(
    name: str,
    surface: SurfaceModel,
    params: DiagramParams,
    alpha: Sequence[Sequence[int]],
    beta: Sequence[Sequence[int]],
    gamma: Sequence[Sequence[int]],
) -> Diagram:
    """좌표 목록으로 도표를 만드는 편의 함수."""
    return Diagram(
        name=name,
        surface=surface,
        params=params,
        alpha=CurveFamily(FamilyLabel.ALPHA, tuple(CurveClass(tuple(v)) for v in alpha)),
        beta=CurveFamily(FamilyLabel.BETA, tuple(CurveClass(tuple(v)) for v in beta)),
        gamma=CurveFamily(FamilyLabel.GAMMA, tuple(CurveClass(tuple(v)) for v in gamma)),
    )
