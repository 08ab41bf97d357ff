"""The fast demo scripts stay runnable (the Monte Carlo one is manual)."""

import subprocess
import sys
from pathlib import Path

DEMOS = Path(__file__).resolve().parent.parent / "demos"


def _run(script: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, str(DEMOS / script)],
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_worst_case_families_demo():
    result = _run("worst_case_families.py")
    assert result.returncode == 0, result.stderr
    assert "follower cost = 22" in result.stdout


def test_adaptive_games_demo():
    result = _run("adaptive_games.py")
    assert result.returncode == 0, result.stderr
    assert "ratio grows without bound" in result.stdout
