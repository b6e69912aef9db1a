from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class IntegerMatrix:
    """정수 행렬 (행 우선 저장). 부동소수점은 허용하지 않음.

    계산은 numpy object 배열 위에서 파이썬 임의정밀도 정수로 수행합니다.
    """
    rows: int
    cols: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"행렬 크기가 음수입니다: {self.rows}x{self.cols}")
        entries = tuple(self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"원소 개수 {len(entries)} 가 {self.rows}x{self.cols} 와 맞지 않습니다"
            )
        for value in entries:
            if isinstance(value, float) or not hasattr(value, "__index__"):
                raise TypeError(f"정수가 아닌 원소: {value!r}")
        object.__setattr__(self, "entries", tuple(int(v) for v in entries))

    # ── 생성 ──

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        for r in rows:
            if len(r) != width:
                raise ValueError(f"행 길이가 일정하지 않습니다: {len(r)} != {width}")
        return cls(len(rows), width, tuple(v for r in rows for v in r))

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], rows: int) -> IntegerMatrix:
        """열 벡터 목록으로 행렬 생성. 열이 없으면 rows x 0 행렬."""
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError(f"열 길이 {len(c)} 가 {rows} 와 맞지 않습니다")
        entries = tuple(columns[j][i] for i in range(rows) for j in range(len(columns)))
        return cls(rows, len(columns), entries)

    @classmethod
    def from_array(cls, array: np.ndarray) -> IntegerMatrix:
        rows, cols = array.shape
        return cls(rows, cols, tuple(int(v) for v in array.reshape(-1)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    # ── 접근 ──

    def to_array(self) -> np.ndarray:
        """numpy object 배열 사본 (원소는 파이썬 int)."""
        array = np.empty(self.rows * self.cols, dtype=object)
        array[:] = list(self.entries)
        return array.reshape(self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) 는 {self.rows}x{self.cols} 범위 밖입니다")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    # ── 연산 ──

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix.from_columns(self.to_rows(), self.cols)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"곱셈 불가: {self.shape} @ {other.shape}")
        if self.cols == 0:
            return IntegerMatrix.zeros(self.rows, other.cols)
        return IntegerMatrix.from_array(np.dot(self.to_array(), other.to_array()))

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix(self.rows, self.cols, tuple(-v for v in self.entries))

    def hstack(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.rows != other.rows:
            raise ValueError(f"행 수가 다릅니다: {self.rows} != {other.rows}")
        return IntegerMatrix.from_columns(self.columns() + other.columns(), self.rows)

    def select_columns(self, indices: Iterable[int]) -> IntegerMatrix:
        return IntegerMatrix.from_columns([self.column(j) for j in indices], self.rows)

    def __str__(self) -> str:
        return str(self.to_rows())


@dataclass(frozen=True)
class SNFResult:
    """스미스 표준형 결과: left · A · right = diag(d)."""
    diagonal: tuple[int, ...]   # 길이 min(m, n), 0은 뒤쪽에 모임
    left: IntegerMatrix         # m x m 가역(unimodular)
    right: IntegerMatrix        # n x n 가역(unimodular)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        """1보다 큰 불변인자 (꼬임 계수)."""
        return tuple(d for d in self.diagonal if d > 1)

    def diagonal_matrix(self) -> IntegerMatrix:
        m, n = self.left.rows, self.right.rows
        entries = [0] * (m * n)
        for i, d in enumerate(self.diagonal):
            entries[i * n + i] = d
        return IntegerMatrix(m, n, tuple(entries))
