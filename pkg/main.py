"""
Main entry point for the soft int-group toolkit.
"""

import sys

from soft_intgroups.cli import run


def main():
    """Run the command line with the process arguments."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    exit(main())
