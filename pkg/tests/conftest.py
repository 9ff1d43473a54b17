import numpy as np
import pytest

from curvkit.core import (model_fubini_study, model_r0, model_sphere,
                          standard_complex_structure, standard_quaternion_triple)
from curvkit.frames import OptimizerConfig
from curvkit.spaces import curvature_space_basis, hyperkahler_subspace, kahler_subspace


@pytest.fixture(scope="session")
def t8():
    return standard_quaternion_triple(8)


@pytest.fixture(scope="session")
def r0_8(t8):
    return model_r0(t8)


@pytest.fixture(scope="session")
def hk8(t8):
    return hyperkahler_subspace(t8)


@pytest.fixture(scope="session")
def fs4():
    """Fubini-Study model at complex dimension 2, c = 4, with its structure."""
    return model_fubini_study(2, 4.0)


@pytest.fixture(scope="session")
def fs8():
    return model_fubini_study(4, 4.0)


@pytest.fixture(scope="session")
def kahler4():
    return kahler_subspace(standard_complex_structure(4))


@pytest.fixture(scope="session")
def generic_spaces():
    return {n: curvature_space_basis(n) for n in (4, 5, 6)}


@pytest.fixture(scope="session")
def sphere8():
    return model_sphere(8, 1.0)


@pytest.fixture
def light_cfg():
    return OptimizerConfig(restarts=6, max_iters=400, seed=0)
