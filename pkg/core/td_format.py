"""삼분할 도표 텍스트 형식 (.td) 파서와 렌더러.

형식 예::

    # CP2 의 종수 1 도표
    td 1
    name CP2
    surface 1 0
    params 1 0 0 0
    alpha 1 0
    beta 0 1
    gamma 1 1

- 첫 번째 유효 행은 버전 행 ``td 1`` 이어야 합니다.
- ``#`` 부터 행 끝까지는 주석입니다.
- ``surface g b``, ``params g k p b`` (닫힌 도표는 p = b = 0).
- 곡선 행은 공백으로 구분한 정수 벡터를 ``;`` 로 나열합니다. 곡선이
  없으면 키워드만 씁니다.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Optional

from core.validator import validate_diagram
from models.diagram import Diagram, DiagramParams, SurfaceModel, build_diagram
from models.errors import ParseError, ShapeError, ValidationError

logger = logging.getLogger(__name__)

FORMAT_VERSION = "1"

_KEY_RE = re.compile(r"[A-Za-z_]+")
_INT_RE = re.compile(r"[+-]?\d+")
_TOKEN_RE = re.compile(r"\S+")
_KEYS = ("name", "surface", "params", "alpha", "beta", "gamma")
_CURVE_KEYS = ("alpha", "beta", "gamma")


def _strip_comment(line: str) -> str:
    idx = line.find("#")
    return line if idx < 0 else line[:idx]


def _parse_ints(text: str, line_no: int, offset: int, expected: Optional[int] = None) -> list[int]:
    """text 의 정수 토큰 목록. offset 은 text 가 행에서 시작하는 0기반 위치."""
    values = []
    for token in _TOKEN_RE.finditer(text):
        if not _INT_RE.fullmatch(token.group()):
            raise ParseError(f"정수가 아닙니다: {token.group()!r}", line_no, offset + token.start() + 1)
        values.append(int(token.group()))
    if expected is not None and len(values) != expected:
        raise ParseError(f"정수 {expected}개가 필요합니다 (받음 {len(values)})", line_no, offset + 1)
    return values


def parse_diagram(text: str, strict: bool = False, default_name: str = "diagram") -> Diagram:
    """.td 텍스트를 도표로 변환.

    Args:
        text: 파일 내용
        strict: 참이면 검증까지 수행
        default_name: name 행이 없을 때 쓸 이름

    Returns:
        Diagram

    Raises:
        ParseError: 구문 오류 (행/열 포함)
        ShapeError: 곡선 벡터 길이가 H1 계수와 다름
        ValidationError: strict 이고 검증에 실패
    """
    fields: dict[str, tuple[int, int, str]] = {}   # key -> (행, 값 시작 위치, 값)
    seen_version = False
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = _strip_comment(raw)
        if not line.strip():
            continue
        key_match = _KEY_RE.search(line)
        if key_match is None or line[:key_match.start()].strip():
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("키워드로 시작해야 합니다", line_no, col)
        key = key_match.group()
        rest_start = key_match.end()
        if rest_start < len(line) and not line[rest_start].isspace():
            raise ParseError(f"알 수 없는 키워드: {line.split()[0]!r}", line_no, key_match.start() + 1)
        rest = line[rest_start:]

        if not seen_version:
            if key != "td":
                raise ParseError("첫 행은 버전 행 'td 1' 이어야 합니다", line_no, key_match.start() + 1)
            version = rest.strip()
            if version != FORMAT_VERSION:
                column = rest_start + len(rest) - len(rest.lstrip()) + 1
                raise ParseError(f"지원하지 않는 버전: {version!r}", line_no, column)
            seen_version = True
            continue
        if key not in _KEYS:
            raise ParseError(f"알 수 없는 키워드: {key!r}", line_no, key_match.start() + 1)
        if key in fields:
            raise ParseError(f"중복된 키워드: {key!r}", line_no, key_match.start() + 1)
        fields[key] = (line_no, rest_start, rest)

    if not seen_version:
        raise ParseError("버전 행 'td 1' 이 없습니다", max(last_line, 1))
    for key in ("surface", "params", *_CURVE_KEYS):
        if key not in fields:
            raise ParseError(f"필수 항목 누락: {key!r}", max(last_line, 1))

    line_no, offset, rest = fields["surface"]
    g, b = _parse_ints(rest, line_no, offset, expected=2)
    if g < 0 or b < 0:
        raise ParseError("곡면 매개변수는 음수일 수 없습니다", line_no, offset + 1)
    surface = SurfaceModel(g, b)

    line_no, offset, rest = fields["params"]
    pg, pk, pp, pb = _parse_ints(rest, line_no, offset, expected=4)
    params = DiagramParams(pg, pk, pp, pb)

    curves = {key: _parse_curves(fields[key], surface.h1_rank) for key in _CURVE_KEYS}
    name = fields["name"][2].strip() if "name" in fields else default_name

    diagram = build_diagram(name or default_name, surface, params,
                            curves["alpha"], curves["beta"], curves["gamma"])
    logger.debug("도표 파싱: %s %s", diagram.name, params)
    if strict:
        report = validate_diagram(diagram)
        if not report.ok:
            raise ValidationError(report)
    return diagram


def _parse_curves(field: tuple[int, int, str], dim: int) -> list[list[int]]:
    line_no, offset, rest = field
    if not rest.strip():
        return []
    vectors = []
    start = 0
    for chunk in rest.split(";"):
        column = offset + start
        values = _parse_ints(chunk, line_no, column)
        if len(values) != dim:
            first = len(chunk) - len(chunk.lstrip())
            raise ShapeError(f"벡터 길이 {len(values)} != H1 계수 {dim}", line_no, column + first + 1)
        vectors.append(values)
        start += len(chunk) + 1
    return vectors


def read_diagram_file(path: Path, strict: bool = False) -> Diagram:
    """UTF-8 .td 파일을 읽어 도표로. 이름이 없으면 파일 이름을 씁니다.

    Raises:
        ParseError: UTF-8 로 해독할 수 없을 때 (행/열 포함) 또는 구문 오류
    """
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        head = data[:e.start]
        line = head.count(b"\n") + 1
        column = len(head) - (head.rfind(b"\n") + 1) + 1
        raise ParseError(f"UTF-8 로 읽을 수 없는 바이트: {data[e.start:e.end]!r}", line, column) from e
    return parse_diagram(text, strict=strict, default_name=path.stem)


def render_diagram(diagram: Diagram) -> str:
    """도표를 .td 텍스트로. parse_diagram 으로 다시 읽으면 같은 도표가 됩니다."""
    params = diagram.params
    lines = [
        f"# {diagram.surface} 위의 {params} 도표",
        f"td {FORMAT_VERSION}",
        f"name {diagram.name.replace('#', '_')}",
        f"surface {diagram.surface.genus} {diagram.surface.boundary_count}",
        f"params {params.g} {params.k} {params.p} {params.b}",
    ]
    for family in diagram.families:
        body = " ; ".join(" ".join(str(v) for v in m.coords) for m in family)
        lines.append(f"{family.label.value} {body}".rstrip())
    return "\n".join(lines) + "\n"
