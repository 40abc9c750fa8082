#!/usr/bin/env python3
# paley_zn/main.py

import os
import sys

# Add parent directory to path to make imports work
current_dir = os.path.dirname(os.path.abspath(__file__))
parent_dir = os.path.dirname(current_dir)
if parent_dir not in sys.path:
    sys.path.insert(0, parent_dir)

from paley_zn.app import PaleyApp


def main(argv=None):
    """Main entry point for the paley-zn command."""
    return PaleyApp().run(argv)


if __name__ == "__main__":
    sys.exit(main())
