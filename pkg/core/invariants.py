"""도표로부터 4-다양체 불변량 계산.

H1 은 모든 곡선으로 나눈 여핵, 교차형식은
V = (L_γ ∩ (L_α + L_β)) / ((L_γ ∩ L_α) + (L_γ ∩ L_β)) 위에서
Q(x, y) = -<x, y_α> (y = y_α + y_β 는 유리 분해) 로 계산합니다.
모든 격자 기저는 표준형이므로 같은 격자를 주는 도표(핸들 미끄러뜨리기 등)는
같은 교차형식 행렬을 얻습니다.
"""

from __future__ import annotations

import logging

import sympy

from core.capping import cap_all
from core.linalg import (
    cokernel_invariants,
    lattice_intersection,
    lattice_quotient,
    rational_decompose,
    rational_inertia,
)
from core.validator import euler_characteristic, validate_diagram
from models.diagram import Diagram
from models.errors import (
    InternalInconsistencyError,
    NotClosedError,
    NotRelativeError,
    ValidationError,
)
from models.integer_matrix import IntegerMatrix
from models.reports import (
    Definiteness,
    FormClassification,
    HomologyReport,
    InvariantReport,
    Parity,
    RelativeReport,
    Verdict,
    VerdictValue,
)

logger = logging.getLogger(__name__)

# distinguish 가 비교하는 순서
_COMPARED_FIELDS = ("b1", "h1_torsion", "b2", "signature", "parity")


def _h1(diagram: Diagram) -> tuple[int, tuple[int, ...]]:
    return cokernel_invariants(diagram.all_curves())


def homology_report(diagram: Diagram) -> HomologyReport:
    """닫힌 도표의 χ, b1, H1 꼬임, b2, b3.

    Raises:
        NotClosedError: 상대 도표
        InternalInconsistencyError: b2 < 0
    """
    if diagram.is_relative:
        raise NotClosedError(f"{diagram.name} 은 상대 도표입니다 (캡핑 후 계산)")
    b1, torsion = _h1(diagram)
    euler = euler_characteristic(diagram.params)
    b2 = euler - 2 + 2 * b1
    if b2 < 0:
        raise InternalInconsistencyError(f"{diagram.name}: b2 = {b2} < 0 (χ={euler}, b1={b1})")
    return HomologyReport(euler=euler, b1=b1, h1_torsion=torsion, b2=b2, b3=b1)


def _form_lattices(diagram: Diagram):
    """(V 의 자유 생성원, V 의 꼬임)."""
    dim = diagram.dim
    alpha = diagram.alpha.matrix(dim)
    beta = diagram.beta.matrix(dim)
    gamma = diagram.gamma.matrix(dim)
    middle = lattice_intersection(gamma, alpha.hstack(beta))
    inner = lattice_intersection(gamma, alpha).hstack(lattice_intersection(gamma, beta))
    quotient = lattice_quotient(middle, inner)
    return quotient.free_generators, quotient.torsion


def _form_matrix(diagram: Diagram, generators: IntegerMatrix) -> IntegerMatrix:
    surface = diagram.surface
    alpha = [m.coords for m in diagram.alpha]
    beta = [m.coords for m in diagram.beta]
    vectors = generators.columns()
    alpha_parts = [rational_decompose(v, alpha, beta)[0] for v in vectors]
    rows = []
    for x in vectors:
        row = []
        for y_alpha in alpha_parts:
            value = sympy.Rational(-surface.pairing(x, y_alpha))
            if not value.is_integer:
                raise InternalInconsistencyError(f"{diagram.name}: 교차형식 값이 정수가 아닙니다 ({value})")
            row.append(int(value))
        rows.append(row)
    form = IntegerMatrix.from_rows(rows, len(vectors))
    if not form.is_symmetric:
        raise InternalInconsistencyError(f"{diagram.name}: 교차형식이 대칭이 아닙니다 {form}")
    return form


def classify_form(form: IntegerMatrix, allow_degenerate: bool = False) -> FormClassification:
    """대칭 정수 형식의 계수, 부호수, 홀짝성, 정부호성."""
    positive, negative, zero = rational_inertia(form)
    n = form.rows
    parity = Parity.EVEN if all(form[i, i] % 2 == 0 for i in range(n)) else Parity.ODD
    if n == 0:
        definiteness = Definiteness.ZERO
    elif zero and allow_degenerate:
        definiteness = Definiteness.DEGENERATE
    elif positive and negative:
        definiteness = Definiteness.INDEFINITE
    elif positive:
        definiteness = Definiteness.POSITIVE
    elif negative:
        definiteness = Definiteness.NEGATIVE
    else:
        definiteness = Definiteness.ZERO
    return FormClassification(
        rank=positive + negative,
        signature=positive - negative,
        parity=parity,
        definiteness=definiteness,
    )


def intersection_form(diagram: Diagram) -> tuple[IntegerMatrix, FormClassification]:
    """닫힌 도표의 교차형식 행렬과 분류.

    Raises:
        NotClosedError: 상대 도표
        InternalInconsistencyError: 계수 또는 꼬임이 호몰로지 계산과 맞지 않을 때
    """
    homology = homology_report(diagram)
    generators, torsion = _form_lattices(diagram)
    if tuple(sorted(torsion)) != tuple(sorted(homology.h1_torsion)):
        raise InternalInconsistencyError(
            f"{diagram.name}: H2 꼬임 {list(torsion)} != H1 꼬임 {list(homology.h1_torsion)}"
        )
    form = _form_matrix(diagram, generators)
    classification = classify_form(form)
    if classification.rank != homology.b2:
        raise InternalInconsistencyError(
            f"{diagram.name}: 교차형식 계수 {classification.rank} != b2 {homology.b2}"
        )
    return form, classification


def invariant_report(diagram: Diagram) -> InvariantReport:
    """닫힌 도표의 전체 불변량 보고서."""
    homology = homology_report(diagram)
    form, classification = intersection_form(diagram)
    logger.debug("불변량 %s: b2=%d, σ=%d", diagram.name, homology.b2, classification.signature)
    return InvariantReport(
        euler=homology.euler,
        b1=homology.b1,
        h1_torsion=homology.h1_torsion,
        b2=homology.b2,
        b3=homology.b3,
        form_matrix=form,
        signature=classification.signature,
        parity=classification.parity,
        definiteness=classification.definiteness,
    )


def relative_report(diagram: Diagram) -> RelativeReport:
    """상대 도표에서 직접 H1(W) 와 (퇴화 가능한) 상대 교차형식을 읽습니다.

    Raises:
        NotRelativeError: 닫힌 도표
    """
    if not diagram.is_relative:
        raise NotRelativeError(f"{diagram.name} 은 닫힌 도표입니다")
    b1, torsion = _h1(diagram)
    generators, _ = _form_lattices(diagram)
    form = _form_matrix(diagram, generators)
    return RelativeReport(
        euler=euler_characteristic(diagram.params),
        b1=b1,
        h1_torsion=torsion,
        form_matrix=form,
        classification=classify_form(form, allow_degenerate=True),
    )


def closed_report(diagram: Diagram) -> InvariantReport:
    """닫힌 도표는 그대로, p = 0 상대 도표는 캡핑 후 불변량."""
    if diagram.is_relative:
        diagram, _ = cap_all(diagram)
    return invariant_report(diagram)


def distinguish(first: Diagram, second: Diagram) -> Verdict:
    """두 도표를 불변량으로 구별 시도.

    매개변수가 다르면 "parameters" 를 증거로 DISTINCT. 같으면 (상대이면
    캡핑하여) b1, H1 꼬임, b2, 부호수, 홀짝성 순으로 비교합니다.

    Raises:
        ValidationError: 어느 한 도표가 검증에 실패할 때
    """
    for diagram in (first, second):
        report = validate_diagram(diagram)
        if not report.ok:
            raise ValidationError(report)
    if first.params != second.params:
        return Verdict(VerdictValue.DISTINCT, "parameters")
    if first.is_relative and first.params.p != 0:
        # 캡핑할 수 없으므로 상대 H1 만 비교
        left_rel, right_rel = relative_report(first), relative_report(second)
        for name in ("b1", "h1_torsion"):
            if getattr(left_rel, name) != getattr(right_rel, name):
                return Verdict(VerdictValue.DISTINCT, name)
        return Verdict(VerdictValue.INCONCLUSIVE)
    left, right = closed_report(first), closed_report(second)
    for name in _COMPARED_FIELDS:
        if getattr(left, name) != getattr(right, name):
            logger.info("%s / %s 구별: %s", first.name, second.name, name)
            return Verdict(VerdictValue.DISTINCT, name, left, right)
    return Verdict(VerdictValue.INCONCLUSIVE, None, left, right)
