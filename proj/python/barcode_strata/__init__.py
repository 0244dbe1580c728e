"""Coxeter-complex coordinates, strata and modified matching distances for
persistence barcodes."""

try:
    from ._strata import *  # noqa: F401,F403  (installed layout)
except ImportError:
    # in-tree builds keep the extension on sys.path instead of in the package
    from _strata import *  # noqa: F401,F403

__version__ = "0.1.0"
