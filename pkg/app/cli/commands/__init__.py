from collections.abc import Callable
from pathlib import Path

from app.cli.commands.experiment import (
    handle_compare_command,
    handle_cross_validate_command,
)
from app.cli.commands.features import (
    handle_dump_coeffs_command,
    handle_extract_command,
)
from app.cli.commands.model import handle_evaluate_command, handle_train_command
from app.cli.config import CliInvocation
from core.enums import Command

COMMAND_HANDLERS: dict[Command, Callable[[CliInvocation], list[Path]]] = {
    Command.extract: handle_extract_command,
    Command.train: handle_train_command,
    Command.evaluate: handle_evaluate_command,
    Command.cross_validate: handle_cross_validate_command,
    Command.dump_coeffs: handle_dump_coeffs_command,
    Command.compare: handle_compare_command,
}

__all__ = [
    "COMMAND_HANDLERS",
    "handle_compare_command",
    "handle_cross_validate_command",
    "handle_dump_coeffs_command",
    "handle_evaluate_command",
    "handle_extract_command",
    "handle_train_command",
]
