"""명령행 인터페이스.

종료 코드: 0 성공, 1 검증/판정/전제조건 실패, 2 파싱/형태 오류,
3 내부 불일치.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Optional, Sequence

from core.capping import cap_all, cap_component
from core.catalog import catalog_diagram, catalog_entries, catalog_get, catalog_names
from core.euler_audit import claim_audits
from core.gluing import boundary_connected_sum, connected_sum
from core.invariants import distinguish, invariant_report, relative_report
from core.report_formatter import (
    format_audit,
    format_catalog_listing,
    format_entry,
    format_euler_audits,
    format_handles,
    format_relative,
    format_report,
    format_validation,
    format_verdict,
)
from core.stabilization import audit_move_sequence, stabilize, stabilize_diagram
from core.td_format import parse_diagram, read_diagram_file, render_diagram
from core.validator import validate_diagram
from models.diagram import Diagram, DiagramParams
from models.errors import (
    InternalInconsistencyError,
    ParseError,
    ShapeError,
    TrisectionError,
    ValidationError,
)
from models.reports import MoveDirection, MoveSequence, StabilizationKind, StabilizationMove
from utils.config import BATCH_WORKERS, OUTPUT_FORMATS, get_output_format

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3

_PARAMS_RE = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*$")


# ─── 입력 해석 ──────────────────────────────────────────────


def resolve_reference(ref: str, strict: bool = False) -> Diagram:
    """'-' 은 표준 입력, 존재하는 경로는 .td 파일, 그 밖은 카탈로그 이름."""
    if ref == "-":
        return parse_diagram(sys.stdin.read(), strict=strict, default_name="stdin")
    path = Path(ref)
    if path.is_file():
        return read_diagram_file(path, strict=strict)
    diagram = catalog_diagram(ref)
    if strict:
        report = validate_diagram(diagram)
        if not report.ok:
            raise ValidationError(report)
    return diagram


def parse_params(text: str) -> DiagramParams:
    match = _PARAMS_RE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"'g,k,p,b' 형식이어야 합니다: {text!r}")
    return DiagramParams(*(int(v) for v in match.groups()))


def parse_counts(text: str) -> MoveSequence:
    parts = text.split(",")
    if len(parts) != 4 or not all(p.strip().isdigit() for p in parts):
        raise argparse.ArgumentTypeError(f"'l+,l-,m+,m-' 형식이어야 합니다: {text!r}")
    return MoveSequence(*(int(p) for p in parts))


def _guarded(ref: str, work: Callable[[str], tuple[str, int]], mode: str) -> tuple[str, int, bool]:
    """참조 하나를 처리. 실패는 (메시지, 종료 코드, 오류 여부) 로 돌려줍니다."""
    try:
        text, status = work(ref)
        return text, status, False
    except (ParseError, ShapeError) as e:
        return f"{ref}: 오류: {e}", EXIT_PARSE, True
    except InternalInconsistencyError as e:
        logger.exception("내부 불일치: %s", ref)
        return f"{ref}: 내부 오류: {e}", EXIT_INTERNAL, True
    except ValidationError as e:
        logger.warning("검증 실패: %s", ref)
        return format_validation(e.report, mode, ref), EXIT_FAILURE, True
    except (TrisectionError, ValueError, OSError) as e:
        return f"{ref}: 오류: {e}", EXIT_FAILURE, True


def _batch(refs: Sequence[str], work: Callable[[str], tuple[str, int]], mode: str) -> int:
    """참조 목록을 스레드 풀에서 처리하고 입력 순서대로 출력.

    한 참조의 실패는 나머지 참조의 보고를 막지 않으며, 종료 코드는 가장 큰 값입니다.
    """
    with ThreadPoolExecutor(max_workers=max(BATCH_WORKERS, 1)) as pool:
        results = list(pool.map(lambda ref: _guarded(ref, work, mode), refs))
    code = EXIT_OK
    for text, status, failed in results:
        print(text, file=sys.stderr if failed else sys.stdout)
        code = max(code, status)
    return code


# ─── 명령 ──────────────────────────────────────────────────


def cmd_validate(args: argparse.Namespace) -> int:
    def work(ref: str) -> tuple[str, int]:
        diagram = resolve_reference(ref)
        report = validate_diagram(diagram)
        if not report.ok:
            logger.warning("검증 실패: %s (%d건)", diagram.name, len(report.violations))
        text = format_validation(report, args.format, diagram.name)
        return text, EXIT_OK if report.ok else EXIT_FAILURE
    return _batch(args.refs, work, args.format)


def cmd_invariants(args: argparse.Namespace) -> int:
    def work(ref: str) -> tuple[str, int]:
        # 불변량 계산은 유효한 도표를 전제로 하므로 항상 먼저 검증
        diagram = resolve_reference(ref, strict=True)
        if not diagram.is_relative:
            return format_report(invariant_report(diagram), args.format, diagram.name), EXIT_OK
        parts = [format_relative(relative_report(diagram), args.format, diagram.name)]
        if diagram.params.p == 0:
            closed, _ = cap_all(diagram)
            parts.append(format_report(invariant_report(closed), args.format, closed.name))
        return "\n".join(parts), EXIT_OK
    return _batch(args.refs, work, args.format)


def cmd_cap(args: argparse.Namespace) -> int:
    diagram = resolve_reference(args.ref, args.strict)
    if args.component is not None:
        print(render_diagram(cap_component(diagram, args.component)), end="")
        return EXIT_OK
    closed, summary = cap_all(diagram)
    print(render_diagram(closed), end="")
    print(format_handles(summary, args.format))
    return EXIT_OK


def cmd_sum(args: argparse.Namespace) -> int:
    left = resolve_reference(args.left, args.strict)
    right = resolve_reference(args.right, args.strict)
    op = boundary_connected_sum if args.command == "bsum" else connected_sum
    print(render_diagram(op(left, right)), end="")
    return EXIT_OK


def cmd_stabilize(args: argparse.Namespace) -> int:
    move = StabilizationMove(
        StabilizationKind(args.type),
        MoveDirection.DESTABILIZE if args.destab else MoveDirection.STABILIZE,
    )
    if _PARAMS_RE.match(args.target):
        print(stabilize(parse_params(args.target), move))
        return EXIT_OK
    diagram = resolve_reference(args.target, args.strict)
    print(render_diagram(stabilize_diagram(diagram, move, args.sign)), end="")
    return EXIT_OK


def cmd_audit_moves(args: argparse.Namespace) -> int:
    report = audit_move_sequence(args.start, args.moves, args.end)
    print(format_audit(report, args.format))
    return EXIT_OK if report.consistent else EXIT_FAILURE


def cmd_audit_euler(args: argparse.Namespace) -> int:
    if args.params:
        targets = [args.params]
    else:
        targets = [catalog_diagram(name).params for name in args.refs] if args.refs else [
            e.diagram.params for e in catalog_entries()
            if not e.diagram.is_relative or e.diagram.params.p == 0
        ]
    audits = []
    for params in dict.fromkeys(targets):
        audits += claim_audits(params, args.n)
    print(format_euler_audits(audits, args.format))
    return EXIT_OK


def cmd_distinguish(args: argparse.Namespace) -> int:
    first = resolve_reference(args.first, args.strict)
    second = resolve_reference(args.second, args.strict)
    verdict = distinguish(first, second)
    print(format_verdict(verdict, args.format, (first.name, second.name)))
    if args.expect_distinct and not verdict.is_distinct:
        return EXIT_FAILURE
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        print(format_catalog_listing(catalog_entries(), args.format))
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise argparse.ArgumentTypeError("catalog show 에는 이름이 필요합니다")
        entry = catalog_get(args.name)
        print(format_entry(entry, render_diagram(entry.diagram), args.format))
        return EXIT_OK
    # export
    if args.all:
        directory = Path(args.all)
        directory.mkdir(parents=True, exist_ok=True)
        for name in catalog_names():
            target = directory / f"{_file_stem(name)}.td"
            target.write_text(render_diagram(catalog_diagram(name)), encoding="utf-8")
        logger.info("카탈로그 %d개 내보냄: %s", len(catalog_names()), directory)
        return EXIT_OK
    if not args.name:
        raise argparse.ArgumentTypeError("catalog export 에는 이름 또는 --all 이 필요합니다")
    text = render_diagram(catalog_diagram(args.name))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return EXIT_OK


def _file_stem(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_]+", "_", name).strip("_")


# ─── 파서 ──────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None,
                        help="출력 형식 (기본: TRISECT_FORMAT)")
    common.add_argument("--strict", action="store_true", help="입력 도표를 먼저 검증")
    common.add_argument("-v", "--verbose", action="count", default=0, help="로그 상세도")

    parser = argparse.ArgumentParser(
        prog="trisect", description="삼분할 도표의 호몰로지 불변량 계산 도구",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="도표 검증")
    p.add_argument("refs", nargs="+")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("invariants", parents=[common], help="불변량 계산")
    p.add_argument("refs", nargs="+")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("cap", parents=[common], help="경계 캡핑")
    p.add_argument("ref")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--component", type=int, help="캡핑할 경계 성분 (1부터)")
    group.add_argument("--all", action="store_true", help="모든 경계 성분 캡핑 (기본)")
    p.set_defaults(handler=cmd_cap)

    for name, text in (("sum", "내부 연결합"), ("bsum", "경계 연결합")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(handler=cmd_sum)

    p = sub.add_parser("stabilize", parents=[common], help="상대 안정화")
    p.add_argument("target", help="'g,k,p,b' 매개변수 또는 도표 참조")
    p.add_argument("--type", choices=("I", "II"), required=True)
    p.add_argument("--destab", action="store_true", help="역안정화 (매개변수만)")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)
    p.set_defaults(handler=cmd_stabilize)

    p = sub.add_parser("audit-moves", parents=[common], help="이동열 감사")
    p.add_argument("--start", type=parse_params, required=True)
    p.add_argument("--moves", type=parse_counts, required=True, help="l+,l-,m+,m-")
    p.add_argument("--end", type=parse_params, required=True)
    p.set_defaults(handler=cmd_audit_moves)

    p = sub.add_parser("audit-euler", parents=[common], help="매개변수 주장의 오일러 지표 감사")
    p.add_argument("refs", nargs="*", help="카탈로그 이름 (기본: 전체)")
    p.add_argument("--params", type=parse_params, help="직접 지정한 g,k,p,b")
    p.add_argument("--n", type=int, default=1, help="자명 도표 합의 n (기본 1)")
    p.set_defaults(handler=cmd_audit_euler)

    p = sub.add_parser("distinguish", parents=[common], help="두 도표 구별")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--expect-distinct", action="store_true",
                   help="INCONCLUSIVE 이면 종료 코드 1")
    p.set_defaults(handler=cmd_distinguish)

    p = sub.add_parser("catalog", parents=[common], help="카탈로그")
    p.add_argument("action", choices=("list", "show", "export"))
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output", help="export 대상 파일")
    p.add_argument("--all", metavar="DIR", help="모든 항목을 DIR 에 내보냄")
    p.set_defaults(handler=cmd_catalog)

    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        logging.getLogger().setLevel(logging.DEBUG)
    elif verbosity == 1:
        logging.getLogger().setLevel(logging.INFO)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        if args.format is None:
            args.format = get_output_format()
        return args.handler(args)
    except (ParseError, ShapeError) as e:
        print(f"오류: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InternalInconsistencyError as e:
        logger.exception("내부 불일치")
        print(f"내부 오류: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValidationError as e:
        print(f"오류: {e}", file=sys.stderr)
        print(format_validation(e.report, args.format or "text"), file=sys.stderr)
        return EXIT_FAILURE
    except (TrisectionError, argparse.ArgumentTypeError, ValueError, OSError) as e:
        print(f"오류: {e}", file=sys.stderr)
        return EXIT_FAILURE
