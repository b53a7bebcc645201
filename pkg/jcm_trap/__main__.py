"""Allows running the package with `python -m jcm_trap`.

@since 0.1.0
"""

import sys

from .cli import main

sys.exit(main())
