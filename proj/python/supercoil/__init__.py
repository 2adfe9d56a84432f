import json as _json

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
from ._core import bounds_report as _bounds_report


def bounds_report(conway):
    """Bounds report of a Conway vector such as "3,1,2", as a dict."""
    return _json.loads(_bounds_report(conway))
