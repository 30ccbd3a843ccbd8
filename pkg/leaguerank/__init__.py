import platform
import sys
from importlib.metadata import version

if not sys.version_info >= (3, 9):
    sys.exit(
        f"ERROR: Leaguerank requires Python >= 3.9, "
        f"but found {platform.python_version()}."
    )

__version__ = version("Leaguerank")
