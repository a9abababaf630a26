from __future__ import annotations

import json
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def schemas() -> dict:
    out = {}
    for path in (REPO_ROOT / "schemas").glob("*.schema.json"):
        out[path.name.split(".")[0]] = json.loads(path.read_text(encoding="utf-8"))
    return out
