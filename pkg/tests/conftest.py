import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from scatkit.pipeline.cases import CaseId, build_case  # noqa: E402


@pytest.fixture
def a2():
    return build_case(CaseId.II)


@pytest.fixture
def b2():
    return build_case(CaseId.III)


@pytest.fixture
def g2():
    return build_case(CaseId.IV)
