from __future__ import annotations

import csv
from pathlib import Path

from loguru import logger

from core.constants import MANIFEST_COLUMNS
from core.enums import Label
from core.exceptions import DatasetError
from core.models import DatasetManifest, ManifestEntry


def parse_label(raw: str) -> Label:
    token = (raw or "").strip().lower()
    try:
        return Label(token)
    except ValueError:
        msg = f"unknown label {raw!r} (expected positive or negative)"
        raise DatasetError(msg) from None


def load_manifest(path: Path | str) -> DatasetManifest:
    """Load a `path,label,subject_id` CSV catalog.

    Relative audio paths resolve against the manifest's directory. Columns
    after the three required ones are kept as per-entry metadata.
    """
    path = Path(path)
    if not path.is_file():
        msg = f"manifest not found: {path}"
        raise DatasetError(msg)

    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = [col.strip() for col in next(reader)]
        except StopIteration:
            msg = f"malformed header in {path}: file is empty"
            raise DatasetError(msg) from None

        if tuple(header[:3]) != MANIFEST_COLUMNS:
            msg = (
                f"malformed header in {path}: expected "
                f"{','.join(MANIFEST_COLUMNS)}, got {','.join(header)}"
            )
            raise DatasetError(msg)
        extra_columns = header[3:]

        entries: list[ManifestEntry] = []
        seen: set[str] = set()
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) < 3:
                msg = f"{path}:{line_no}: expected at least 3 columns"
                raise DatasetError(msg)

            raw_path, raw_label, subject_id = (cell.strip() for cell in row[:3])
            if not raw_path:
                msg = f"{path}:{line_no}: empty path"
                raise DatasetError(msg)
            if raw_path in seen:
                msg = f"{path}:{line_no}: duplicate path {raw_path!r}"
                raise DatasetError(msg)
            seen.add(raw_path)

            try:
                label = parse_label(raw_label)
            except DatasetError as e:
                msg = f"{path}:{line_no}: {e}"
                raise DatasetError(msg) from None

            audio_path = Path(raw_path)
            if not audio_path.is_absolute():
                audio_path = path.parent / audio_path

            metadata = {
                name: cell.strip()
                for name, cell in zip(extra_columns, row[3:], strict=False)
                if cell.strip()
            }
            entries.append(
                ManifestEntry(
                    path=audio_path,
                    label=label,
                    subject_id=subject_id,
                    metadata=metadata,
                )
            )

    manifest = DatasetManifest(entries=tuple(entries), source=path)
    n_pos, n_neg = manifest.class_counts
    logger.debug(
        "Loaded manifest {} ({} positive, {} negative)", path, n_pos, n_neg
    )
    return manifest


def require_both_classes(manifest: DatasetManifest) -> None:
    n_pos, n_neg = manifest.class_counts
    if n_pos == 0 or n_neg == 0:
        msg = (
            "training requires at least one entry of each class "
            f"(positive={n_pos}, negative={n_neg})"
        )
        raise DatasetError(msg)


def write_manifest(path: Path, entries: list[ManifestEntry]) -> None:
    """Write a manifest with paths relative to its own directory when possible."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(MANIFEST_COLUMNS)
        for entry in entries:
            try:
                rel = entry.path.relative_to(path.parent)
            except ValueError:
                rel = entry.path
            writer.writerow([rel.as_posix(), entry.label.value, entry.subject_id])
