"""Entry point for `python -m kmismatch`."""
import sys

from kmismatch import main

sys.exit(main())
