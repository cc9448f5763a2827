import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("aoi_tools", derandomize=True, deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("aoi_tools")

def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the full-scale acceptance runs")

def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skipSlow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skipSlow)
