"""공용 픽스처."""

import os
import random
import sys
from pathlib import Path

import pytest

# 프로젝트 루트를 sys.path에 추가
PROJECT_ROOT = Path(__file__).parent.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

# 성질 검사 반복 횟수 (기본 1000)
PROPERTY_RUNS = int(os.getenv("TRISECT_PROPERTY_RUNS", "1000"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def property_runs() -> int:
    return PROPERTY_RUNS
