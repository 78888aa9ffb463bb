from __future__ import annotations

import re
from pathlib import Path

from loguru import logger

from app.cli.commands.common import load_manifest_for
from app.cli.config import CliInvocation
from app.json_output import (
    COEFFS_DIR,
    COEFFS_INDEX_FILE,
    FEATURES_FILE,
    FEATURES_META_FILE,
    build_coeffs_index_payload,
    build_features_meta_payload,
    write_json,
)
from core.evaluation import extract_matrix
from core.exceptions import CoughDwtError, StageError
from core.features import write_feature_csv
from core.normalize import zscore_signal
from core.wavelet import (
    dwt_decompose,
    get_wavelet,
    serialize_decomposition_shape,
    write_coefficients_csv,
)
from data.segmentation import load_segments

_UNSAFE = re.compile(r"[^A-Za-z0-9_.-]+")


def handle_extract_command(invocation: CliInvocation) -> list[Path]:
    config = invocation.config
    manifest = load_manifest_for(config)
    matrix, corpus = extract_matrix(manifest, config)

    csv_path = config.out_dir / FEATURES_FILE
    meta_path = config.out_dir / FEATURES_META_FILE
    write_feature_csv(csv_path, matrix)
    write_json(
        meta_path,
        build_features_meta_payload(
            config, n_rows=matrix.n_rows, warnings=corpus.warnings
        ),
    )
    print(
        f"Wrote {matrix.n_rows} rows x {len(matrix.feature_names)} features "
        f"to {csv_path.as_posix()}"
    )
    return [csv_path, meta_path]


def coeffs_file_name(row: int, subject_id: str, segment_index: int) -> str:
    return f"{row:04d}_{_UNSAFE.sub('_', subject_id)}_{segment_index}.csv"


def handle_dump_coeffs_command(invocation: CliInvocation) -> list[Path]:
    config = invocation.config
    manifest = load_manifest_for(config)
    try:
        corpus = load_segments(manifest, config.segment_duration_ms)
        spec = get_wavelet(config.wavelet)
    except CoughDwtError as e:
        raise StageError(cause=e, stage=e.stage) from e

    segments = corpus.segments
    if invocation.limit is not None:
        segments = segments[: invocation.limit]

    coeffs_dir = config.out_dir / COEFFS_DIR
    written: list[Path] = []
    index: list[dict[str, object]] = []
    for row, seg in enumerate(segments):
        signal = zscore_signal(seg.samples) if config.signal_prenorm else seg.samples
        try:
            decomp = dwt_decompose(signal, spec, config.levels, config.boundary)
        except CoughDwtError as e:
            raise StageError(cause=e, stage=e.stage) from e

        name = coeffs_file_name(row, seg.subject_id, seg.segment_index)
        path = coeffs_dir / name
        write_coefficients_csv(path, decomp)
        written.append(path)
        index.append(
            {
                "file": name,
                "subject_id": seg.subject_id,
                "segment_index": seg.segment_index,
                "label": seg.label.value,
                **serialize_decomposition_shape(decomp),
            }
        )
        logger.debug("dumped {}", name)

    index_path = coeffs_dir / COEFFS_INDEX_FILE
    write_json(index_path, build_coeffs_index_payload(config, index))
    print(f"Wrote {len(written)} coefficient tables to {coeffs_dir.as_posix()}")
    return [*written, index_path]
