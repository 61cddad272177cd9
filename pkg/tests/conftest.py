import pytest
from hypothesis import HealthCheck, settings

from weightbounds.corpus import DEFAULT_SELFTEST_SEED, random_corpus

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")


@pytest.fixture(scope="session")
def corpus1000():
    """The seeded 1000-code corpus shared by the property and acceptance suites."""
    return list(random_corpus(1000, DEFAULT_SELFTEST_SEED))
