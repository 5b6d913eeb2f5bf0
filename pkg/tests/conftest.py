import pytest

from domcount.forest import spider


@pytest.fixture
def tstar():
    """Spider with legs 2, 2, 4: nine vertices, center 0."""
    return spider(2, 2, 4)


@pytest.fixture
def tstar_text():
    return "n 9\n0 1\n0 3\n0 5\n1 2\n3 4\n5 6\n6 7\n7 8\n"
