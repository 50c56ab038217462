import pytest


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    """Run a test once per kernel backend."""
    monkeypatch.setenv("EGYPTFRAC_NUMBA", "1" if request.param == "numba" else "0")
    return request.param
