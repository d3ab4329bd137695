"""Exact algebra of integer-valued boolean functions on finite sets."""

try:
    from ._boolfun import *  # noqa: F401,F403
    from ._boolfun import __doc__  # noqa: F401
except ImportError:  # running against an in-tree build
    from _boolfun import *  # noqa: F401,F403
