"""__main__.py: python -m topocheck."""
import sys

from topocheck.cli import main

__author__ = "topocheck contributors"
__license__ = "MIT"


sys.exit(main())
