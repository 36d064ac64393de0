"""Wind-energy harvesting guidance simulator.

Thin wrapper over the compiled ``_windguide`` extension. All quantities are
normalized unless a function says otherwise; see ``NormalizationBasis``.
"""

from ._windguide import *  # noqa: F401,F403
from ._windguide import __version__  # noqa: F401
