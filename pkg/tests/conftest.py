import os

import pytest

from looptorus.cocycle import CocycleContext
from looptorus.fock import ModuleParams
from looptorus.gln import module_from_spec
from looptorus.loop import BAlgebra

HERE = os.path.dirname(__file__)
ROOT = os.path.dirname(HERE)


def scenario_path(name):
    return os.path.join(ROOT, "scenarios", name + ".json")


def fixture_path(name):
    return os.path.join(HERE, "fixtures", name + ".json")


def golden_path(name):
    return os.path.join(HERE, "golden", name + ".json")


@pytest.fixture(scope="session")
def ctx_m1():
    # n=2, t1 t2 = -t2 t1
    return CocycleContext(2, 2, [[0, 1], [1, 0]])


@pytest.fixture(scope="session")
def ctx_id():
    # commutative torus: sigma constant 1, rad f = Z^2
    return CocycleContext(2, 2, [[0, 0], [0, 0]])


@pytest.fixture(scope="session")
def ctx_z3():
    # n=2, q21 = zeta_3; the sqrt branch is NOT multiplicative here
    return CocycleContext(2, 3, [[0, 2], [1, 0]])


@pytest.fixture(scope="session")
def ctx_z3_n3():
    # q12 = zeta_3, third variable commutes with everything
    return CocycleContext(3, 3, [[0, 1, 0], [2, 0, 0], [0, 0, 0]])


@pytest.fixture(scope="session")
def params_m1(ctx_m1):
    alg = BAlgebra(ctx_m1.field, "laurent")
    V = module_from_spec(ctx_m1.field, 2, "natural")
    return ModuleParams(ctx_m1, alg, V, (0, 0))


@pytest.fixture(scope="session")
def params_m1_alpha(ctx_m1):
    alg = BAlgebra(ctx_m1.field, "laurent", psi_z=ctx_m1.field.zeta(1))
    V = module_from_spec(ctx_m1.field, 2, "dual")
    return ModuleParams(ctx_m1, alg, V, ("1/2", "-2"))


@pytest.fixture(scope="session")
def params_id_trunc(ctx_id):
    alg = BAlgebra(ctx_id.field, "truncated", k=3)
    V = module_from_spec(ctx_id.field, 2, "trivial")
    return ModuleParams(ctx_id, alg, V, ("1/3", "0"))
