import pytest

from ga32.kernels import get_kernels


@pytest.fixture(params=["numpy", "numba"])
def backend(request):
    """Run the test against each kernel backend."""
    return get_kernels(request.param)
