import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.stem)
def test_demo_runs(script, tmp_path):
    subprocess.run([sys.executable, str(script), str(tmp_path / "out.svg")],
                   check=True, capture_output=True, cwd=tmp_path, timeout=120)
