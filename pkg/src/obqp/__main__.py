"""Entry point for the obqp CLI."""

from obqp.cli import main

if __name__ == "__main__":
    main()
