"""Package version information, echoed into every report header."""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

PACKAGE_VERSION: str = "1.0.0"
DISTRIBUTION = "hpcakit"


def get_version() -> str:
    """Installed distribution version; ``PACKAGE_VERSION`` when running from a source tree."""
    try:
        return version(DISTRIBUTION)
    except PackageNotFoundError:
        return PACKAGE_VERSION
