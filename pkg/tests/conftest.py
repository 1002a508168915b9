import pytest

from zetalab.grid import build_grid
from zetalab.moments import ErrorTermSeries, fit_p4
from zetalab.spectral import bundled_sample_path, load_spectral


@pytest.fixture(scope="session")
def grid210():
    """Main evaluation grid: covers every acceptance range up to t=210."""
    return build_grid(0.0, 210.0, 0.01, 1e-8, threads=2)


@pytest.fixture(scope="session")
def poly(grid210):
    return fit_p4(grid210, 10.0, 200.0)


@pytest.fixture(scope="session")
def series(grid210, poly):
    return ErrorTermSeries.from_grid(grid210, poly)


@pytest.fixture(scope="session")
def grid60():
    return build_grid(0.0, 60.0, 0.01, 1e-8)


@pytest.fixture(scope="session")
def grid60_fine():
    return build_grid(0.0, 60.0, 0.005, 1e-8)


@pytest.fixture(scope="session")
def grid100_fine():
    """Tenfold-refined grid over [0, 100] used as a quadrature oracle."""
    return build_grid(0.0, 100.0, 0.001, 1e-8, threads=2)


@pytest.fixture(scope="session")
def spectral_data():
    return load_spectral(bundled_sample_path())
