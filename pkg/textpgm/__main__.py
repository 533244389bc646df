"""
Run the command line interface with python -m textpgm

The code is licensed under the MIT license.
"""

import sys
from textpgm.cli import main

sys.exit(main())
