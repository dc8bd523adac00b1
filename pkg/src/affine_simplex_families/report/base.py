"""
Colour codes and shared helpers for terminal output.
"""

import re

from colorama import Fore, Style

_ANSI_ESCAPE = re.compile(r"\x1B(?:[@-Z\\-_]|\[[0-?]*[ -/]*[@-~])")


class Colors:
    """Colorama codes used across the CLI output."""

    RESET = Style.RESET_ALL
    BOLD = Style.BRIGHT
    DIM = Style.DIM

    TITLE = Style.BRIGHT + Fore.CYAN
    HEADER = Fore.CYAN
    DESCRIPTION = Fore.LIGHTBLACK_EX
    KEY = Fore.MAGENTA

    MAGENTA = Fore.MAGENTA
    CYAN = Fore.CYAN
    WHITE = Fore.WHITE
    YELLOW = Fore.YELLOW
    GREEN = Fore.GREEN
    BLUE = Fore.BLUE
    RED = Fore.RED
    LIGHTBLACK_EX = Fore.LIGHTBLACK_EX


def strip_ansi(text: str) -> str:
    """Remove ANSI colour codes, for file output."""
    return _ANSI_ESCAPE.sub("", text)


class ColoredOutput:
    """Mixin for classes that print coloured status lines."""

    use_colors: bool = True

    def _colorize(self, text: str, color: str) -> str:
        """Apply color to text if colors are enabled."""
        if self.use_colors:
            return f"{color}{text}{Colors.RESET}"
        return text

    def _print_status(self, message: str, color: str = Colors.WHITE) -> None:
        """Print a status message with optional coloring."""
        print(self._colorize(message, color))
