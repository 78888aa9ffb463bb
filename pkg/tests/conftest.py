from __future__ import annotations

import sys
from pathlib import Path

import pytest
from loguru import logger

# Ensure the repository root is on sys.path so tests can import `app`, `core`, etc.
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from data.synthetic import SyntheticCorpusSpec, generate_dataset  # noqa: E402


@pytest.fixture
def log_messages():
    """Collect loguru records emitted during a test as 'LEVEL: message' lines."""
    messages: list[str] = []
    sink_id = logger.add(
        lambda message: messages.append(
            f"{message.record['level'].name}: {message.record['message']}"
        ),
        level="DEBUG",
    )
    yield messages
    logger.remove(sink_id)


@pytest.fixture(scope="session")
def synthetic_manifest(tmp_path_factory) -> Path:
    """Two separable classes of 60 segments each, 6 subjects per class."""
    out_dir = tmp_path_factory.mktemp("synthetic")
    return generate_dataset(out_dir, SyntheticCorpusSpec(seed=7))


@pytest.fixture(scope="session")
def small_manifest(tmp_path_factory) -> Path:
    """12 segments per class over 4 subjects each; quick CLI runs."""
    out_dir = tmp_path_factory.mktemp("small")
    return generate_dataset(
        out_dir,
        SyntheticCorpusSpec(segments_per_class=12, subjects_per_class=4, seed=3),
    )


@pytest.fixture
def tiny_manifest(tmp_path) -> Path:
    """Four segments: two positive subjects, two negative subjects."""
    return generate_dataset(
        tmp_path / "tiny",
        SyntheticCorpusSpec(segments_per_class=2, subjects_per_class=2, seed=1),
    )
