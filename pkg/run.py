#!/usr/bin/env python3
"""
Run Rees Hochschild

Usage:
    python run.py all instances/example2-matrix-units.conf
    python run.py hh instances/c3-sparse-sandwich.conf --max-degree 3 --json report.json
"""

import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from cli import main

if __name__ == '__main__':
    sys.exit(main())
