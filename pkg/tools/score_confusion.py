"""Print the five headline metrics for a set of confusion counts."""

from __future__ import annotations

import argparse
import json
from collections.abc import Sequence

from app.cli.render import format_confusion, format_metrics_line
from core.evaluation import ConfusionMatrix, metrics


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Score confusion counts (positive = COVID-19 positive).",
    )
    parser.add_argument("--tp", type=int, required=True)
    parser.add_argument("--fp", type=int, required=True)
    parser.add_argument("--tn", type=int, required=True)
    parser.add_argument("--fn", type=int, required=True)
    parser.add_argument(
        "--json",
        action="store_true",
        help="Print exact fractions and percentages as JSON.",
    )
    return parser


def format_scores(cm: ConfusionMatrix) -> str:
    return "\n".join([format_confusion(cm), format_metrics_line(metrics(cm))])


def main(argv: Sequence[str] | None = None) -> None:
    args = _build_parser().parse_args(argv)
    cm = ConfusionMatrix(TP=args.tp, FP=args.fp, TN=args.tn, FN=args.fn)

    if args.json:
        print(
            json.dumps(
                {"confusion": cm.as_dict(), "metrics": metrics(cm).as_dict()},
                indent=2,
            )
        )
        return
    print(format_scores(cm))


if __name__ == "__main__":
    main()
