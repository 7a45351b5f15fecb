"""Command-line entry point."""

from koszul.cli import main


if __name__ == '__main__':
    main()
