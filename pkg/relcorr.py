#!/usr/bin/env python3
"""relcorr Runner Script

This script sets up the Python path and runs the relcorr command line.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.cli.main import main

if __name__ == '__main__':
    sys.exit(main())
