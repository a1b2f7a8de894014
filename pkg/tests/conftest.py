import pytest

from polychora import catalog


@pytest.fixture(scope="session")
def cx_tesseract():
    return catalog.complex_for("tesseract")


@pytest.fixture(scope="session")
def cx600():
    return catalog.complex_for("600-cell")


@pytest.fixture(scope="session")
def cx120():
    return catalog.complex_for("120-cell")


@pytest.fixture(scope="session")
def m_tesseract():
    return catalog.metric_complex("tesseract")


@pytest.fixture(scope="session")
def m600():
    return catalog.metric_complex("600-cell")


@pytest.fixture(scope="session")
def m120():
    return catalog.metric_complex("120-cell")
