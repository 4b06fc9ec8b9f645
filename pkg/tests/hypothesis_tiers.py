"""Hypothesis settings tiers shared by the property tests.

Tiers:
- ROUNDTRIP_SETTINGS: 1000 examples - file and lift round trips, tuple involutions
- STANDARD_SETTINGS: 200 examples - tuple-level identities
- QUICK_SETTINGS: 30 examples - checks that build a sequence per example
"""

from hypothesis import settings

ROUNDTRIP_SETTINGS = settings(max_examples=1000)

STANDARD_SETTINGS = settings(max_examples=200)

QUICK_SETTINGS = settings(max_examples=30)
