from __future__ import annotations

import sys
from collections.abc import Sequence

from loguru import logger

from app.cli.commands import COMMAND_HANDLERS
from app.cli.config import parse_config
from app.cli.logs import configure_logging
from core.exceptions import CoughDwtError, StageError
from core.wavelet import validate_all_wavelets

EXIT_OK = 0
EXIT_FAILURE = 2


def format_error(error: CoughDwtError) -> str:
    """'error [<stage>]: <message>' (StageError already carries its tag)."""
    if isinstance(error, StageError):
        return f"error {error}"
    return f"error [{error.stage.value}]: {error}"


def main(argv: Sequence[str] | None = None) -> int:
    try:
        invocation = parse_config(argv)
    except CoughDwtError as e:
        print(format_error(e), file=sys.stderr)
        return EXIT_FAILURE

    configure_logging(invocation.verbose)
    logger.debug("resolved config: {}", invocation.config.to_dict())
    try:
        validate_all_wavelets()
        COMMAND_HANDLERS[invocation.command](invocation)
    except CoughDwtError as e:
        print(format_error(e), file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
