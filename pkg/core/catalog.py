"""표준 및 재구성 삼분할 도표 카탈로그.

닫힌 표준 도표(S4, CP2, S2xS2 등), 자명한 상대 도표 TRIVIAL(b),
호프 띠 도표 DPLUS/DMINUS, 그리고 구별 예제 쌍들의
호몰로지 수준 재구성을 담습니다. 재구성 항목은 기대 매개변수와 캡핑/상대
불변량(obligation)을 함께 기록하며 테스트가 이를 확인합니다.

TRISECT_CATALOG_DIR 가 설정되어 있으면 그 디렉토리의 *.td 파일도
USER 출처 항목으로 읽습니다.
"""

from __future__ import annotations

import logging
import re
from functools import lru_cache
from pathlib import Path
from typing import Callable, Optional

from core.td_format import read_diagram_file
from core.validator import validate_diagram
from models.catalog_entry import (
    CatalogEntry,
    ExpectedClosed,
    ExpectedRelative,
    Provenance,
)
from models.diagram import Diagram, DiagramParams, SurfaceModel, build_diagram
from models.errors import ParseError, ShapeError, UnknownNameError
from models.reports import Parity
from utils.config import MAX_LISTED_NCP2, MAX_TRIVIAL_BOUNDARY, get_catalog_dir

logger = logging.getLogger(__name__)

# "a1 + b2 - 2c1" 형태의 항
_TERM_RE = re.compile(r"\s*([+-]?)\s*(\d*)\s*([abc])(\d+)\s*")
_TRIVIAL_RE = re.compile(r"^TRIVIAL\((\d+)\)$")
_NCP2_RE = re.compile(r"^NCP2\((\d+)\)$")

# 서로 구별되어야 하는 항목 쌍
DISTINGUISHING_PAIRS = (
    ("S2xD2_A", "S2xD2_B"),
    ("E2_A", "E2_B"),
    ("CORK_A", "CORK_B"),
    ("W01_A", "W01_B"),
    ("DPLUS", "DMINUS"),
)


def curve(surface: SurfaceModel, expression: str) -> tuple[int, ...]:
    """기저 이름 식을 좌표로 변환. 예: curve(Σ_{2,2}, "a1 + b2 - c1").

    Raises:
        ValueError: 해석할 수 없는 식이거나 기저 밖의 이름
    """
    coords = [0] * surface.h1_rank
    labels = {name: idx for idx, name in enumerate(surface.basis_labels())}
    pos = 0
    expression = expression.strip()
    while pos < len(expression):
        match = _TERM_RE.match(expression, pos)
        if not match or match.end() == pos:
            raise ValueError(f"곡선 식을 해석할 수 없습니다: {expression!r} (위치 {pos})")
        sign, count, letter, index = match.groups()
        name = f"{letter}{index}"
        if name not in labels:
            raise ValueError(f"{surface} 에 기저 {name} 이 없습니다")
        value = int(count) if count else 1
        coords[labels[name]] += -value if sign == "-" else value
        pos = match.end()
    return tuple(coords)


def _diagram(name, surface, params, alpha, beta, gamma) -> Diagram:
    return build_diagram(
        name, surface, params,
        [curve(surface, e) for e in alpha],
        [curve(surface, e) for e in beta],
        [curve(surface, e) for e in gamma],
    )


# ─── 닫힌 표준 도표 ──────────────────────────────────────────


def closed_blocks(name: str, blocks: list[str]) -> Diagram:
    """종수 1 블록(CP2: "+", CP2BAR: "-", S1xS3: "s")을 이어 붙인 닫힌 도표."""
    g = len(blocks)
    surface = SurfaceModel(g)
    alpha, beta, gamma = [], [], []
    k = 0
    for i, kind in enumerate(blocks, start=1):
        alpha.append(f"a{i}")
        if kind == "s":
            beta.append(f"a{i}")
            gamma.append(f"a{i}")
            k += 1
        else:
            beta.append(f"b{i}")
            gamma.append(f"a{i} {'+' if kind == '+' else '-'} b{i}")
    return _diagram(name, surface, DiagramParams.closed(g, k), alpha, beta, gamma)


def ncp2(n: int) -> Diagram:
    """n 개의 CP2 연결합. n = 0 이면 S4."""
    return closed_blocks(f"NCP2({n})", ["+"] * n)


def s2xs2() -> Diagram:
    surface = SurfaceModel(2)
    return _diagram(
        "S2xS2", surface, DiagramParams.closed(2, 0),
        ["a1", "a2"], ["b1", "b2"], ["a1 + b2", "a2 + b1"],
    )


# ─── 상대 도표 ──────────────────────────────────────────────


def trivial(b: int) -> Diagram:
    """곡선이 없는 (0, b-1; 0, b) 도표 (B4 에 1-핸들 b-1 개). b = 1 은 D4."""
    if b < 1:
        raise ValueError(f"경계 성분 수는 1 이상이어야 합니다: {b}")
    return build_diagram(
        f"TRIVIAL({b})", SurfaceModel(0, b), DiagramParams.relative(0, b - 1, 0, b), [], [], []
    )


def hopf_band(sign: int) -> Diagram:
    """D4 의 (1,1;0,2) 도표. sign 은 γ 곡선의 b1 계수 (호프 띠의 부호)."""
    if sign not in (1, -1):
        raise ValueError(f"sign 은 +1 또는 -1 이어야 합니다: {sign}")
    surface = SurfaceModel(1, 2)
    op = "+" if sign == 1 else "-"
    return _diagram(
        "DPLUS" if sign == 1 else "DMINUS", surface, DiagramParams.relative(1, 1, 0, 2),
        ["a1"], ["b1"], [f"a1 {op} b1 + c1"],
    )


def _s2xd2(name: str, first_gamma: str) -> Diagram:
    surface = SurfaceModel(2, 2)
    return _diagram(
        name, surface, DiagramParams.relative(2, 1, 0, 2),
        ["a1", "a2"], ["b1", "b2"], [first_gamma, "a2 + b1"],
    )


def _e2(name: str, gamma: list[str]) -> Diagram:
    surface = SurfaceModel(2, 2)
    return _diagram(name, surface, DiagramParams.relative(2, 1, 0, 2), ["a1", "a2"], ["b1", "b2"], gamma)


def _rank3(name: str, gamma: list[str]) -> Diagram:
    surface = SurfaceModel(3, 4)
    return _diagram(
        name, surface, DiagramParams.relative(3, 3, 0, 4),
        ["a1", "a2", "a3"], ["b1", "b2", "b3"], gamma,
    )


def _w01_b() -> Diagram:
    surface = SurfaceModel(3, 1)
    return _diagram(
        "W01_B", surface, DiagramParams.relative(3, 2, 1, 1),
        ["a1", "a2"], ["b1 + b3", "b2"], ["a1 + b1 + a3", "a2 + b2 + a3"],
    )


def _closed(b2: int, signature: int, parity: Parity, b1: int = 0) -> ExpectedClosed:
    return ExpectedClosed(b2=b2, signature=signature, parity=parity, b1=b1)


_EVEN, _ODD = Parity.EVEN, Parity.ODD


def _fixed_entries() -> dict[str, Callable[[], CatalogEntry]]:
    rel = DiagramParams.relative
    closed = DiagramParams.closed
    contractible = ExpectedRelative(b1=0)
    return {
        "S4": lambda: CatalogEntry(
            "S4", closed_blocks("S4", []), Provenance.EXACT,
            "종수 0 도표", closed(0, 0), _closed(0, 0, _EVEN)),
        "CP2": lambda: CatalogEntry(
            "CP2", closed_blocks("CP2", ["+"]), Provenance.EXACT,
            "종수 1, γ = a1 + b1", closed(1, 0), _closed(1, 1, _ODD)),
        "CP2BAR": lambda: CatalogEntry(
            "CP2BAR", closed_blocks("CP2BAR", ["-"]), Provenance.EXACT,
            "종수 1, γ = a1 - b1", closed(1, 0), _closed(1, -1, _ODD)),
        "S1xS3": lambda: CatalogEntry(
            "S1xS3", closed_blocks("S1xS3", ["s"]), Provenance.EXACT,
            "세 족 모두 a1", closed(1, 1), _closed(0, 0, _EVEN, b1=1)),
        "S2xS2": lambda: CatalogEntry(
            "S2xS2", s2xs2(), Provenance.EXACT,
            "종수 2, 쌍곡형 교차형식", closed(2, 0), _closed(2, 0, _EVEN)),
        "D4": lambda: CatalogEntry(
            "D4", trivial(1).renamed("D4"), Provenance.EXACT,
            "TRIVIAL(1) 과 같음", rel(0, 0, 0, 1), _closed(0, 0, _EVEN), contractible, "S4"),
        "DPLUS": lambda: CatalogEntry(
            "DPLUS", hopf_band(1), Provenance.RECONSTRUCTION,
            "양의 호프 띠 단일도형 D4. c1 계수로 H1(W) = 0 을 맞춤; 캡핑은 CP2",
            rel(1, 1, 0, 2), _closed(1, 1, _ODD), contractible, "CP2"),
        "DMINUS": lambda: CatalogEntry(
            "DMINUS", hopf_band(-1), Provenance.RECONSTRUCTION,
            "음의 호프 띠 단일도형 D4; 캡핑은 CP2BAR",
            rel(1, 1, 0, 2), _closed(1, -1, _ODD), contractible, "CP2BAR"),
        "S2xD2_A": lambda: CatalogEntry(
            "S2xD2_A", _s2xd2("S2xD2_A", "a1 + b2 + c1"), Provenance.RECONSTRUCTION,
            "자명한 단일도형의 S2xD2; 캡핑은 S2xS2 (짝)",
            rel(2, 1, 0, 2), _closed(2, 0, _EVEN), ExpectedRelative(0, ((0,),)), "S2xS2"),
        "S2xD2_B": lambda: CatalogEntry(
            "S2xD2_B", _s2xd2("S2xD2_B", "a1 + b1 + b2 + c1"), Provenance.RECONSTRUCTION,
            "뒤틀린 단일도형의 S2xD2; 캡핑 교차형식 [[1,1],[1,0]] (홀)",
            rel(2, 1, 0, 2), _closed(2, 0, _ODD), ExpectedRelative(0, ((0,),))),
        "E2_A": lambda: CatalogEntry(
            "E2_A", _e2("E2_A", ["a1 + b1 + c1", "a2 + b2 - c1"]), Provenance.RECONSTRUCTION,
            "오일러 수 2 원판 다발; 캡핑은 NCP2(2) (부호수 2)",
            rel(2, 1, 0, 2), _closed(2, 2, _ODD), ExpectedRelative(0, ((2,),)), "NCP2(2)"),
        "E2_B": lambda: CatalogEntry(
            "E2_B", _e2("E2_B", ["a1 + b2 + c1", "a2 + b1 - c1"]), Provenance.RECONSTRUCTION,
            "같은 다양체의 다른 단일도형; 캡핑은 S2xS2 (부호수 0)",
            rel(2, 1, 0, 2), _closed(2, 0, _EVEN), ExpectedRelative(0, ((2,),)), "S2xS2"),
        "CORK_A": lambda: CatalogEntry(
            "CORK_A", _rank3("CORK_A", ["a1 - b1 + c1", "a2 - b2 + c2", "a3 - b3 + c3"]),
            Provenance.RECONSTRUCTION,
            "코르크 첫째 단일도형; 캡핑은 -I3",
            rel(3, 3, 0, 4), _closed(3, -3, _ODD), contractible),
        "CORK_B": lambda: CatalogEntry(
            "CORK_B", _rank3("CORK_B", ["a1 + b1 + c1", "a2 - b2 + c2", "a3 - b3 + c3"]),
            Provenance.RECONSTRUCTION,
            "코르크 둘째 단일도형; 캡핑은 diag(1,-1,-1)",
            rel(3, 3, 0, 4), _closed(3, -1, _ODD), contractible),
        "W01_A": lambda: CatalogEntry(
            "W01_A", _rank3("W01_A", ["a1 - b1 + c1", "a2 - b2 + c1 + c2", "a3 - b3 + c2 + c3"]),
            Provenance.RECONSTRUCTION,
            "가역 다양체, p = 0 단일도형",
            rel(3, 3, 0, 4), _closed(3, -3, _ODD), contractible),
        "W01_B": lambda: CatalogEntry(
            "W01_B", _w01_b(), Provenance.RECONSTRUCTION,
            "같은 다양체, 페이지 종수 1 단일도형 (캡핑 불가)",
            rel(3, 2, 1, 1), None, contractible),
    }


_FIXED = _fixed_entries()


def _trivial_entry(b: int) -> CatalogEntry:
    if not 1 <= b <= MAX_TRIVIAL_BOUNDARY:
        raise UnknownNameError(f"TRIVIAL({b}) 는 1..{MAX_TRIVIAL_BOUNDARY} 범위 밖입니다")
    return CatalogEntry(
        f"TRIVIAL({b})", trivial(b), Provenance.EXACT,
        "B4 에 1-핸들 b-1 개", DiagramParams.relative(0, b - 1, 0, b),
        _closed(0, 0, _EVEN), ExpectedRelative(b1=b - 1), "S4",
    )


def _ncp2_entry(n: int) -> CatalogEntry:
    return CatalogEntry(
        f"NCP2({n})", ncp2(n), Provenance.EXACT,
        "CP2 의 n 중 연결합", DiagramParams.closed(n, 0), _closed(n, n, _ODD if n else _EVEN),
    )


def catalog_names() -> list[str]:
    """목록 순서의 항목 이름 (매개 항목은 대표 범위만, 사용자 항목 포함)."""
    names = list(_FIXED)
    names += [f"TRIVIAL({b})" for b in range(1, MAX_TRIVIAL_BOUNDARY + 1)]
    names += [f"NCP2({n})" for n in range(0, MAX_LISTED_NCP2 + 1)]
    names += [name for name in _user_entries() if name not in names]
    return names


def catalog_get(name: str) -> CatalogEntry:
    """이름으로 카탈로그 항목 조회.

    Raises:
        UnknownNameError: 없는 이름
    """
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()
    if match := _TRIVIAL_RE.match(name):
        return _trivial_entry(int(match.group(1)))
    if match := _NCP2_RE.match(name):
        return _ncp2_entry(int(match.group(1)))
    user = _user_entries()
    if name in user:
        return user[name]
    raise UnknownNameError(f"카탈로그에 없는 이름입니다: {name!r}")


def catalog_diagram(name: str) -> Diagram:
    """이름으로 도표 조회."""
    return catalog_get(name).diagram


def catalog_entries() -> list[CatalogEntry]:
    return [catalog_get(name) for name in catalog_names()]


def catalog_pairs() -> list[tuple[CatalogEntry, CatalogEntry]]:
    return [(catalog_get(a), catalog_get(b)) for a, b in DISTINGUISHING_PAIRS]


def load_user_catalog(directory: Path) -> dict[str, CatalogEntry]:
    """디렉토리의 *.td 파일을 USER 항목으로 읽습니다. 이름이 없으면 파일 이름 사용.

    읽을 수 없거나 검증에 실패한 파일은 경고를 남기고 건너뜁니다.
    """
    entries = {}
    for path in sorted(Path(directory).glob("*.td")):
        try:
            diagram = read_diagram_file(path)
        except (ParseError, ShapeError) as e:
            logger.warning("사용자 카탈로그 파일을 읽을 수 없어 건너뜀: %s (%s)", path, e)
            continue
        report = validate_diagram(diagram)
        if not report.ok:
            logger.warning("사용자 카탈로그 도표가 유효하지 않아 건너뜀: %s (%s)",
                           path, ", ".join(sorted(k.value for k in report.kinds())))
            continue
        if diagram.name in _FIXED or diagram.name in entries:
            logger.warning("사용자 카탈로그 이름 중복, 건너뜀: %s (%s)", diagram.name, path)
            continue
        entries[diagram.name] = CatalogEntry(
            diagram.name, diagram, Provenance.USER, str(path), diagram.params,
        )
    logger.info("사용자 카탈로그 %d개 로드: %s", len(entries), directory)
    return entries


@lru_cache(maxsize=1)
def _user_entries() -> dict[str, CatalogEntry]:
    directory: Optional[Path] = get_catalog_dir()
    if directory is None:
        return {}
    return load_user_catalog(directory)
