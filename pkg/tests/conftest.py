import pytest

from smashkit.fields import FieldSpec


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="run the exhaustive slow tier (2^16 GF(2) sweep)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="slow tier; enable with --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def QQ():
    return FieldSpec.rational()


@pytest.fixture(scope="session")
def GF2():
    return FieldSpec.prime(2)


@pytest.fixture(scope="session")
def GF3():
    return FieldSpec.prime(3)


@pytest.fixture(scope="session")
def GF5():
    return FieldSpec.prime(5)


@pytest.fixture(scope="session")
def GF7():
    return FieldSpec.prime(7)
