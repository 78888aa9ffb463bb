from app.cli.parser.args import build_parser

__all__ = [
    "build_parser",
]