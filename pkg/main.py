import sys

from src.cli import EXIT_INPUT, run
from src.config import Config


def main() -> int:
    """Entry point: configure logging, check settings, dispatch the subcommand."""
    Config.configure_logging()
    if not Config.validate():
        return EXIT_INPUT
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
