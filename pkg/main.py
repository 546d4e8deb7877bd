#!/usr/bin/env python3
"""
predictkit - Main Entry Point

Runs the return-predictability pipeline from a source checkout without installing the package.
"""

import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from predictkit.reporting.cli import main

if __name__ == "__main__":
    sys.exit(main())
