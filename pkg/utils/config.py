import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# 프로젝트 루트 디렉토리
PROJECT_ROOT = Path(__file__).parent.parent

# .env 파일 로드
load_dotenv(PROJECT_ROOT / ".env")

# 출력 형식: "text" 또는 "structured"(JSON)
OUTPUT_FORMATS = ("text", "structured")


def get_catalog_dir() -> Optional[Path]:
    """사용자 카탈로그(.td) 디렉토리. 설정되지 않으면 None."""
    value = os.getenv("TRISECT_CATALOG_DIR", "")
    if not value:
        return None
    path = Path(value)
    if not path.is_dir():
        raise ValueError(
            f"TRISECT_CATALOG_DIR 경로가 디렉토리가 아닙니다: {path}. "
            ".env 파일을 확인해주세요."
        )
    return path


def get_output_format() -> str:
    """기본 출력 형식 반환."""
    fmt = os.getenv("TRISECT_FORMAT", "text")
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(
            f"TRISECT_FORMAT 값이 올바르지 않습니다: {fmt!r} "
            f"(허용: {', '.join(OUTPUT_FORMATS)})"
        )
    return fmt


# 일괄 처리 스레드 수
BATCH_WORKERS = int(os.getenv("TRISECT_WORKERS", "4"))

# 기본 로그 레벨 (CLI -v 로 INFO/DEBUG 상향)
LOG_LEVEL = os.getenv("TRISECT_LOG_LEVEL", "WARNING")

# TRIVIAL(b) 카탈로그 항목의 최대 경계 성분 수
MAX_TRIVIAL_BOUNDARY = int(os.getenv("TRISECT_MAX_TRIVIAL_BOUNDARY", "8"))

# 목록에 표시할 NCP2(n) 의 최대 n
MAX_LISTED_NCP2 = int(os.getenv("TRISECT_MAX_LISTED_NCP2", "8"))
