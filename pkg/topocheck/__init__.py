"""__init__.py: topocheck module init."""

__author__ = "topocheck contributors"
__license__ = "MIT"


version = '0.1.0'
