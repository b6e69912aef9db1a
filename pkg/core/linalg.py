"""정수/유리수 정확 선형대수.

스미스 표준형(SNF)과 이를 이용한 격자 연산(핵, 생성 기저, 교집합, 몫),
유리수 일차방정식 풀이, 대칭 유리 행렬의 관성(inertia) 계산을 제공합니다.
SNF 는 numpy object 배열 위에서, 에르미트 표준형과 유리수 소거는 sympy
위에서 정확하게 수행되며 부동소수점은 사용하지 않습니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import sympy
from sympy.matrices.normalforms import hermite_normal_form

from models.errors import InternalInconsistencyError, NotInSpanError
from models.integer_matrix import IntegerMatrix, SNFResult

logger = logging.getLogger(__name__)


# ── 스미스 표준형 ──

def _identity_array(n: int) -> np.ndarray:
    return IntegerMatrix.identity(n).to_array()


def _find_pivot(work: np.ndarray, s: int) -> Optional[tuple[int, int]]:
    """s 이후 부분행렬에서 절댓값이 가장 작은 0이 아닌 원소 (행 우선 동률 처리)."""
    best = None
    rows, cols = work.shape
    for i in range(s, rows):
        for j in range(s, cols):
            value = work[i, j]
            if value != 0 and (best is None or abs(value) < best[0]):
                best = (abs(value), i, j)
    return None if best is None else (best[1], best[2])


def _find_indivisible_row(work: np.ndarray, s: int) -> Optional[int]:
    pivot = work[s, s]
    rows, cols = work.shape
    for i in range(s + 1, rows):
        for j in range(s + 1, cols):
            if work[i, j] % pivot != 0:
                return i
    return None


def smith_normal_form(matrix: IntegerMatrix) -> SNFResult:
    """스미스 표준형 L · A · R = D 를 계산합니다.

    결정적 알고리즘: 남은 부분행렬에서 절댓값 최소 원소를 피벗으로 골라
    행/열을 소거하고, 나머지가 남으면 피벗을 다시 고릅니다. 피벗이
    나머지 원소를 나누지 않으면 해당 행을 피벗 행에 더해 다시 진행합니다.

    Args:
        matrix: m x n 정수 행렬

    Returns:
        SNFResult (대각 d는 d_i | d_{i+1}, 0은 뒤쪽)
    """
    m, n = matrix.shape
    work = matrix.to_array()
    left = _identity_array(m)
    right = _identity_array(n)

    for s in range(min(m, n)):
        pivot_pos = _find_pivot(work, s)
        if pivot_pos is None:
            break
        while True:
            i, j = pivot_pos
            work[[s, i]] = work[[i, s]]
            left[[s, i]] = left[[i, s]]
            work[:, [s, j]] = work[:, [j, s]]
            right[:, [s, j]] = right[:, [j, s]]

            pivot = work[s, s]
            clean = True
            for r in range(s + 1, m):
                q = work[r, s] // pivot
                if q:
                    work[r] = work[r] - q * work[s]
                    left[r] = left[r] - q * left[s]
                if work[r, s] != 0:
                    clean = False
            for c in range(s + 1, n):
                q = work[s, c] // pivot
                if q:
                    work[:, c] = work[:, c] - q * work[:, s]
                    right[:, c] = right[:, c] - q * right[:, s]
                if work[s, c] != 0:
                    clean = False

            if clean:
                bad = _find_indivisible_row(work, s)
                if bad is None:
                    break
                work[s] = work[s] + work[bad]
                left[s] = left[s] + left[bad]
            pivot_pos = _find_pivot(work, s)

        if work[s, s] < 0:
            work[s] = -work[s]
            left[s] = -left[s]

    diagonal = tuple(int(work[i, i]) for i in range(min(m, n)))
    return SNFResult(
        diagonal=diagonal,
        left=IntegerMatrix.from_array(left),
        right=IntegerMatrix.from_array(right),
    )


def matrix_rank(matrix: IntegerMatrix) -> int:
    return smith_normal_form(matrix).rank


# ── 격자 연산 ──

def integer_kernel(matrix: IntegerMatrix) -> IntegerMatrix:
    """정수 핵 {x : A x = 0} 의 기저 (열). SNF 오른쪽 행렬의 rank 이후 열."""
    snf = smith_normal_form(matrix)
    return snf.right.select_columns(range(snf.rank, matrix.cols))


def to_sympy(matrix: IntegerMatrix) -> sympy.Matrix:
    """IntegerMatrix 를 sympy 정수 행렬로 (빈 행렬 포함)."""
    return sympy.Matrix(matrix.rows, matrix.cols, list(matrix.entries))


def hermite_basis(generators: IntegerMatrix) -> IntegerMatrix:
    """열들이 생성하는 격자의 표준(에르미트) 기저.

    sympy 의 열 에르미트 표준형 H = A U 에서 0 열을 버린 것입니다.
    같은 격자이면 생성원 선택과 무관하게 같은 결과를 돌려줍니다.
    """
    dim = generators.rows
    if generators.cols == 0 or dim == 0 or not any(generators.entries):
        return IntegerMatrix.zeros(dim, 0)
    hnf = hermite_normal_form(to_sympy(generators))
    columns = [hnf.col(j) for j in range(hnf.cols) if any(hnf.col(j))]
    return IntegerMatrix.from_columns([[int(v) for v in c] for c in columns], dim)


def column_span_basis(generators: IntegerMatrix) -> IntegerMatrix:
    """생성원 열들이 만드는 격자의 기저 (표준형)."""
    return hermite_basis(generators)


def lattice_intersection(first: IntegerMatrix, second: IntegerMatrix) -> IntegerMatrix:
    """두 격자 span(X) ∩ span(Y) 의 기저.

    [X | -Y] 의 정수 핵 (u, v) 에 대해 X u 가 교집합을 생성합니다.
    """
    if first.rows != second.rows:
        raise ValueError(f"주변 차원이 다릅니다: {first.rows} != {second.rows}")
    kernel = integer_kernel(first.hstack(-second))
    top = IntegerMatrix.from_rows(kernel.to_rows()[:first.cols], kernel.cols)
    return column_span_basis(first @ top)


@dataclass(frozen=True)
class LatticeQuotient:
    """격자 몫 M / N = Z^rank ⊕ (꼬임)."""
    free_generators: IntegerMatrix   # 자유 부분의 대표 (주변 좌표, 열)
    torsion: tuple[int, ...]         # 1보다 큰 불변인자

    @property
    def free_rank(self) -> int:
        return self.free_generators.cols


def cokernel_invariants(matrix: IntegerMatrix) -> tuple[int, tuple[int, ...]]:
    """Z^m / span(열) 의 (자유 계수, 꼬임)."""
    snf = smith_normal_form(matrix)
    return matrix.rows - snf.rank, snf.torsion


def lattice_quotient(ambient: IntegerMatrix, sub: IntegerMatrix) -> LatticeQuotient:
    """격자 몫 span(M) / span(N).

    Args:
        ambient: 격자 M의 기저 (열, 일차독립)
        sub: M에 포함된 격자 N의 생성원 (열)

    Raises:
        InternalInconsistencyError: N이 M에 포함되지 않을 때
    """
    rank_m = ambient.cols
    coords = []
    for vector in sub.columns():
        try:
            solution = solve_rational(ambient, vector)
        except NotInSpanError as e:
            raise InternalInconsistencyError(f"부분격자가 격자 밖에 있습니다: {vector}") from e
        if not all(x.is_integer for x in solution):
            raise InternalInconsistencyError(f"부분격자 원소의 좌표가 정수가 아닙니다: {vector}")
        coords.append([int(x) for x in solution])
    coord_matrix = IntegerMatrix.from_columns(coords, rank_m)
    snf = smith_normal_form(coord_matrix)
    left_inverse = unimodular_inverse(snf.left)
    free = left_inverse.select_columns(range(snf.rank, rank_m))
    return LatticeQuotient(free_generators=ambient @ free, torsion=snf.torsion)


# ── 유리수 연산 ──

def solve_rational(matrix: IntegerMatrix, target: Sequence[int | sympy.Rational]) -> tuple[sympy.Rational, ...]:
    """A z = y 의 유리수 해 (기약 행사다리꼴에서 자유변수는 0).

    Raises:
        NotInSpanError: 해가 없을 때
    """
    if len(target) != matrix.rows:
        raise ValueError(f"벡터 길이 {len(target)} 가 {matrix.rows} 와 맞지 않습니다")
    augmented = to_sympy(matrix).row_join(sympy.Matrix(matrix.rows, 1, list(target)))
    reduced, pivots = augmented.rref()
    if matrix.cols in pivots:
        raise NotInSpanError(f"벡터 {tuple(target)} 가 열 공간에 없습니다")
    solution = [sympy.Integer(0)] * matrix.cols
    for r, col in enumerate(pivots):
        solution[col] = sympy.Rational(reduced[r, matrix.cols])
    return tuple(solution)


def rational_decompose(
    vector: Sequence[int],
    first_basis: Sequence[Sequence[int]],
    second_basis: Sequence[Sequence[int]],
) -> tuple[tuple[sympy.Rational, ...], tuple[sympy.Rational, ...]]:
    """y = y_A + y_B (y_A ∈ span_Q A, y_B ∈ span_Q B) 분해.

    A, B 가 일차독립일 필요는 없으며, 기약 행사다리꼴에서 자유변수를 0으로 둔
    해를 사용하므로 결과는 결정적입니다.

    Raises:
        NotInSpanError: y 가 span_Q(A ∪ B) 밖에 있을 때
    """
    dim = len(vector)
    columns = [list(v) for v in first_basis] + [list(v) for v in second_basis]
    if not columns:
        if any(vector):
            raise NotInSpanError(f"벡터 {tuple(vector)} 가 빈 생성공간 밖에 있습니다")
        zero = (sympy.Integer(0),) * dim
        return zero, zero
    z = solve_rational(IntegerMatrix.from_columns(columns, dim), vector)
    split = len(first_basis)
    part_a = sympy.zeros(dim, 1)
    part_b = sympy.zeros(dim, 1)
    for idx, coeff in enumerate(z):
        if coeff == 0:
            continue
        column = sympy.Matrix(columns[idx])
        if idx < split:
            part_a += coeff * column
        else:
            part_b += coeff * column
    return tuple(part_a), tuple(part_b)


def unimodular_inverse(matrix: IntegerMatrix) -> IntegerMatrix:
    """가역 정수 행렬의 정수 역행렬.

    Raises:
        InternalInconsistencyError: 행렬식이 ±1 이 아닐 때
    """
    if not matrix.is_square:
        raise ValueError(f"정사각 행렬이 아닙니다: {matrix.shape}")
    if matrix.rows == 0:
        return IntegerMatrix.identity(0)
    m = to_sympy(matrix)
    if m.det() not in (1, -1):
        raise InternalInconsistencyError(f"정수 역행렬이 없습니다 (det = {m.det()})")
    return IntegerMatrix.from_rows(m.inv().tolist(), matrix.cols)


def determinant(matrix: IntegerMatrix) -> int:
    """정수 행렬식 (Bareiss 소거)."""
    if not matrix.is_square:
        raise ValueError(f"정사각 행렬이 아닙니다: {matrix.shape}")
    if matrix.rows == 0:
        return 1
    return int(to_sympy(matrix).det(method="bareiss"))


def rational_inertia(matrix: IntegerMatrix) -> tuple[int, int, int]:
    """대칭 행렬의 관성 (양, 음, 영 고유값 개수).

    합동 변환 P^T Q P 로 대각화하므로 실수 근사가 필요 없습니다.
    """
    if not matrix.is_symmetric:
        raise InternalInconsistencyError(f"대칭 행렬이 아닙니다: {matrix}")
    n = matrix.rows
    a = to_sympy(matrix)

    positive = negative = 0
    for k in range(n):
        diag = next((i for i in range(k, n) if a[i, i] != 0), None)
        if diag is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i, j] != 0), None)
            if off is None:
                break
            i, j = off
            # 대각 성분이 모두 0 이므로 새 a_ii = 2 a_ij != 0
            a[i, :] = a[i, :] + a[j, :]
            a[:, i] = a[:, i] + a[:, j]
            diag = i
        a.row_swap(k, diag)
        a.col_swap(k, diag)
        pivot = a[k, k]
        if pivot > 0:
            positive += 1
        else:
            negative += 1
        for r in range(k + 1, n):
            factor = a[r, k] / pivot
            if factor != 0:
                a[r, :] = a[r, :] - factor * a[k, :]
                a[:, r] = a[:, r] - factor * a[:, k]
    return positive, negative, n - positive - negative
