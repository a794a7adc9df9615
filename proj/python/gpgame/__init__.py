"""Threshold equilibria for Gamma-Poisson coordination games.

The heavy lifting lives in the compiled extension ``gpgame._core``; this
package re-exports its public names.
"""

from gpgame._core import *  # noqa: F401,F403
from gpgame._core import DEFAULT_SEED, __version__  # noqa: F401
