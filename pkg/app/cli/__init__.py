from app.cli.config import CliInvocation, parse_config
from app.cli.main import format_error, main, run
from app.cli.parser import build_parser

__all__ = [
    "CliInvocation",
    "build_parser",
    "format_error",
    "main",
    "parse_config",
    "run",
]
