"""Regenerate the golden command-line outputs under tests/golden/.

Run from the repository root after an intentional output change:

    python tests/regen_golden.py

Every golden file is the byte-exact stdout of one command; the determinism
test replays the same commands and compares.
"""

from __future__ import annotations

import contextlib
import io
import os
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
from golden_cases import GOLDEN_CASES  # noqa: E402

from wtw.cli import main  # noqa: E402


def capture(argv: list[str]) -> str:
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        status = main(argv)
    return buffer.getvalue() + f"# exit {status}\n"


def regenerate() -> None:
    os.environ["WTW_COLOR"] = "0"
    golden_dir = pathlib.Path(__file__).resolve().parent / "golden"
    golden_dir.mkdir(exist_ok=True)
    for name, argv in GOLDEN_CASES.items():
        path = golden_dir / f"{name}.txt"
        path.write_text(capture(argv), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    regenerate()
