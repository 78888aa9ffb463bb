from __future__ import annotations

import argparse
from typing import NoReturn

from core.constants import SUPPORTED_WAVELETS
from core.enums import (
    Boundary,
    Command,
    KernelKind,
    NormalizerMethod,
    OutputFormat,
    SplitMode,
)
from core.exceptions import ConfigError


class CliArgumentParser(argparse.ArgumentParser):
    """argparse that raises ConfigError instead of exiting on bad input."""

    def error(self, message: str) -> NoReturn:
        raise ConfigError(message)


def _values(enum_type: type) -> list[str]:
    return [member.value for member in enum_type]


def _add_experiment_flags(parser: argparse.ArgumentParser) -> None:
    # every default is None so an absent flag never overrides the config file
    parser.add_argument(
        "--config",
        metavar="PATH",
        default=None,
        help="JSON config file; flags given here override its values.",
    )
    parser.add_argument(
        "--manifest",
        metavar="PATH",
        default=None,
        help="CSV manifest with columns path,label,subject_id.",
    )
    parser.add_argument("--wavelet", choices=SUPPORTED_WAVELETS, default=None)
    parser.add_argument(
        "--levels",
        type=int,
        default=None,
        help="Decomposition depth (default 5, giving 54 features).",
    )
    parser.add_argument("--boundary", choices=_values(Boundary), default=None)
    parser.add_argument(
        "--duration-ms",
        type=float,
        default=None,
        help="Segment window length in milliseconds (default 1640).",
    )
    parser.add_argument(
        "--prenorm-signal",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="z-score each raw segment before the wavelet transform.",
    )
    parser.add_argument(
        "--norm",
        choices=_values(NormalizerMethod),
        default=None,
        help="Feature normalizer (default zscore).",
    )
    parser.add_argument(
        "--paper-mode",
        action=argparse.BooleanOptionalAction,
        default=None,
        help=(
            "Fit the normalizer once on every segment instead of on each "
            "training fold (leaks test statistics; for replication only)."
        ),
    )
    parser.add_argument("--kernel", choices=_values(KernelKind), default=None)
    parser.add_argument(
        "--gamma",
        type=float,
        default=None,
        help="RBF width; omitted means 1 / (d * mean feature variance).",
    )
    parser.add_argument("--c", type=float, default=None, help="Box constraint C.")
    parser.add_argument(
        "--positive-weight",
        type=float,
        default=None,
        help="Multiplier applied to C for positive-class examples.",
    )
    parser.add_argument("--tolerance", type=float, default=None)
    parser.add_argument("--max-passes", type=int, default=None)
    parser.add_argument("--folds", type=int, default=None)
    parser.add_argument("--split", choices=_values(SplitMode), default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument(
        "--out",
        metavar="DIR",
        default=None,
        help="Directory receiving the artifacts (default ./out).",
    )
    parser.add_argument(
        "--format",
        choices=_values(OutputFormat),
        default=None,
        help="Summary style on stdout. Default: plain.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log per-segment and per-fold progress to stderr.",
    )


_COMMAND_HELP = {
    Command.extract: "Write the per-segment feature table (features.csv).",
    Command.train: "Train on the whole manifest (model.json, normalization.json).",
    Command.evaluate: "Score a trained model on a manifest (metrics.json).",
    Command.cross_validate: "Run k-fold cross-validation (report.json).",
    Command.dump_coeffs: "Write per-segment wavelet band coefficients.",
    Command.compare: "Cross-validate every normalizer on one fold plan.",
}


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="coughdwt",
        description=(
            "Cough-recording COVID-19 screening research tool: wavelet "
            "features, feature normalization and a kernel SVM."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    for command, help_text in _COMMAND_HELP.items():
        cmd = sub.add_parser(command.value, help=help_text, description=help_text)
        _add_experiment_flags(cmd)
        if command is Command.evaluate:
            cmd.add_argument(
                "--model",
                metavar="PATH",
                default=None,
                help="model.json from a previous train run.",
            )
        if command is Command.dump_coeffs:
            cmd.add_argument(
                "--limit",
                type=int,
                default=None,
                help="Only dump the first N segments.",
            )
    return parser
