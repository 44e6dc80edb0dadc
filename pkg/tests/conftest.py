"""Shared fixtures: the per-preset pipeline runs are expensive (Groebner
solving plus number-field work), so they are computed once per session."""

import pytest

from charzeta.pipeline import analyze_presentation
from charzeta.presets import PRESETS

PRESET_NAMES = ["weeks", "meyerhoff", "m010m12", "m003m43", "m003m34"]


@pytest.fixture(scope="session")
def analyses():
    return {name: analyze_presentation(PRESETS[name].presentation)
            for name in PRESET_NAMES}


@pytest.fixture(scope="session")
def weeks_analysis(analyses):
    return analyses["weeks"]


@pytest.fixture(scope="session")
def holonomies():
    """Riley-form solutions per preset (slowest part of the suite)."""
    from charzeta.holonomy import solve_holonomy
    from charzeta.presentation import parse_presentation
    return {name: solve_holonomy(parse_presentation(PRESETS[name].presentation))
            for name in PRESET_NAMES}
