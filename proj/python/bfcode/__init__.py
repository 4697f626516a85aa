"""Linear codes over GF(2^t) from Boolean functions on GF(2^n)."""

try:
    from ._bfcode import *  # noqa: F401,F403  (installed package layout)
    from . import _bfcode as _impl
except ImportError:  # in-tree builds put the module next to the package
    from _bfcode import *  # noqa: F401,F403
    import _bfcode as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
