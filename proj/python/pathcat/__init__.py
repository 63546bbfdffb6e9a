"""Path categories of finite cubical and simplicial complexes."""

try:
    from ._pathcat import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # in-tree builds put _pathcat on sys.path directly
    from _pathcat import *  # noqa: F401,F403
