"""Write a synthetic two-class WAV corpus and its manifest."""

from __future__ import annotations

import argparse
from collections.abc import Sequence
from pathlib import Path

from data.synthetic import SyntheticCorpusSpec, generate_dataset


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description=(
            "Generate band-limited noise segments: positives in one wavelet "
            "detail band, negatives in another."
        ),
    )
    parser.add_argument("out_dir", type=Path, help="Destination directory.")
    parser.add_argument("--segments-per-class", type=int, default=60)
    parser.add_argument("--subjects-per-class", type=int, default=6)
    parser.add_argument("--sample-rate", type=int, default=8000)
    parser.add_argument("--positive-band", type=int, default=2)
    parser.add_argument("--negative-band", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> None:
    args = _build_parser().parse_args(argv)
    spec = SyntheticCorpusSpec(
        segments_per_class=args.segments_per_class,
        subjects_per_class=args.subjects_per_class,
        sample_rate=args.sample_rate,
        positive_band=args.positive_band,
        negative_band=args.negative_band,
        seed=args.seed,
    )
    manifest = generate_dataset(args.out_dir, spec)
    print(f"Wrote {manifest.as_posix()}")


if __name__ == "__main__":
    main()
