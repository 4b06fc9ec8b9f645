"""Shared pytest setup: import path and hypothesis profiles.

Profiles:
- ci: derandomized, so every run checks the same examples (default)
- explore: random examples; pick the seed with --hypothesis-seed

Select with HYPOTHESIS_PROFILE=explore.
"""

import os
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("explore", deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "ci"))
