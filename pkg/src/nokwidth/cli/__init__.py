"""nokwidth.cli

``nok-width`` command line: ``roots``, ``width``, ``essential``, ``gamma`` and
``verify`` subcommands printing one canonical JSON document each.

Exit codes: 0 success, 1 a verification failed, 2 invalid input, 3 internal
invariant violation.
"""

from .cases import CaseSpec
from .main import build_parser, main

__all__ = ["CaseSpec", "build_parser", "main"]
