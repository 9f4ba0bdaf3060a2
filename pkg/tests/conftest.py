import numpy as np
import pytest

import grslab as g


@pytest.fixture(scope="session")
def shifted_sys():
    return g.make_example(g.ExampleSpec(id="shifted_ho", a=0.5, n=16))


@pytest.fixture(scope="session")
def shifted_sys32():
    return g.make_example(g.ExampleSpec(id="shifted_ho", a=0.5, n=32))


@pytest.fixture(scope="session")
def example1_sys():
    return g.make_example(g.ExampleSpec(id="example1", n=12))


@pytest.fixture(scope="session")
def perturbed_sys():
    return g.make_example(g.ExampleSpec(id="perturbed_anharmonic", beta=4.0, n=8))


@pytest.fixture()
def rng():
    return np.random.default_rng(1234)
