"""k-shell proportional seed selection and idea-spread simulation.

Thin python surface over the C++ core: graph ingestion and generation,
k-shell decomposition, centrality metrics, the six seed-selection
strategies and the uninformed/informed Monte Carlo simulator.
"""

from ._kspread import *  # noqa: F401,F403
from ._kspread import __version__  # noqa: F401
