#!/usr/bin/env python3
"""
Bessel-Struve toolkit - Entry Point

Usage:
    python run.py kernel --alpha 0.5 --lambda 1 --grid -2:2:41
    python run.py verify --suite all

Environment Variables:
    BS_NODES        - Default quadrature node count (default: 64)
    BS_THREADS      - Worker threads for grid evaluation (default: min(8, cpus))
    BS_PROGRESS     - Show progress bars (default: false)
    BS_OUTPUT_FOLDER - Base directory for relative --out paths (default: .)
    LOG_LEVEL       - Logging level (default: WARNING)
"""

import sys

from dotenv import load_dotenv
load_dotenv()

from app import run_cli


if __name__ == '__main__':
    sys.exit(run_cli())
