"""
Entry point for the affine_simplex_families package.

This allows the package to be executed as:
    python -m affine_simplex_families
"""

import sys

from colorama import Fore, Style

from .cli import main

if __name__ == "__main__":
    try:
        sys.exit(main())
    except Exception as e:
        print(f"{Fore.RED}Fatal error: {e}{Style.RESET_ALL}")
        import traceback

        traceback.print_exc()
        sys.exit(1)
