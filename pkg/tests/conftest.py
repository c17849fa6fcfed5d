import pytest

from modmax import catalog


@pytest.fixture(scope="session")
def suite_entries():
    return catalog.standard_suite()


@pytest.fixture(scope="session")
def suite_groups(suite_entries):
    """Suite groups built once; analysis caches accumulate on the instances."""
    return {entry.name: catalog.shared_group(entry.name) for entry in suite_entries}
