import pytest

from airylocus.airy import warmup


@pytest.fixture(scope="session", autouse=True)
def _compile_kernels():
    # first call triggers jit compilation; keep it out of per-test timings
    warmup()
