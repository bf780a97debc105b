import pytest

from virtab import make_cell, make_virtual_table


@pytest.fixture
def filmography():
    """The three-row filmography table with its second row highlighted."""
    rows = [
        [
            make_cell("2014", ["Year"]),
            make_cell("La Vie devant elles [fr]", ["Title"]),
            make_cell("Solana", ["Role"]),
        ],
        [
            make_cell("2016", ["Year"]),
            make_cell("Kids in Love", ["Title"]),
            make_cell("Evelyn", ["Role"]),
        ],
        [
            make_cell("2017", ["Year"]),
            make_cell("The Starry Sky Above Me", ["Title"]),
            make_cell("Justyna", ["Role"]),
        ],
    ]
    return make_virtual_table(
        "Alma Jodorowsky", "Filmography", rows, [(1, 0), (1, 1), (1, 2)]
    )


def pytest_configure(config):
    from hypothesis import HealthCheck, settings

    settings.register_profile(
        "stress",
        max_examples=1000,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow],
    )
