import pytest

from pretentious.ntheory import build_prime_table


@pytest.fixture(scope="session")
def table_1e6():
    return build_prime_table(10**6)


@pytest.fixture(scope="session")
def table_1e5_spf():
    return build_prime_table(10**5, mode="spf")


@pytest.fixture(scope="session")
def table_1e6_spf():
    return build_prime_table(10**6, mode="spf")
