#!/usr/bin/env python3
"""
groupdet - Group Determinants of Finite Abelian Groups
Main entry point
"""
import sys

from groupdet.ui import run


def main():
    """Main entry point"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
