"""Python bindings for the 1-D defocusing inhomogeneous NLS laboratory."""

import os
import sys

_ext_dir = os.environ.get("INLS_EXT_DIR")
if _ext_dir:
    # in-tree usage: extension lives in the CMake build directory
    sys.path.insert(0, _ext_dir)
    from _core import *  # noqa: F401,F403
    from _core import __doc__  # noqa: F401
else:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__  # noqa: F401
