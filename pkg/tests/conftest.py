import pytest

from hwprobe import define_ring, ideal_module, parse_polynomial, quotient_module


def poly(ring_q, text):
    return parse_polynomial(ring_q.ambient, text)


@pytest.fixture(scope="session")
def cusp():
    return define_ring(["x", "y"], [3, 2], 7, ["x^2 - y^3"], domain=True)


@pytest.fixture(scope="session")
def cusp_m(cusp):
    return ideal_module(cusp, [poly(cusp, "x"), poly(cusp, "y")])


@pytest.fixture(scope="session")
def threefold():
    return define_ring(["x", "y", "z", "w"], [1, 1, 1, 1], 101,
                       ["x*w - y*z"], domain=True)


@pytest.fixture(scope="session")
def threefold_mn(threefold):
    m = quotient_module(threefold, [poly(threefold, "x"), poly(threefold, "z")])
    n = quotient_module(threefold, [poly(threefold, "x"), poly(threefold, "y")])
    return m, n


@pytest.fixture(scope="session")
def surface():
    return define_ring(["x", "y", "z"], [1, 1, 1], 101, ["x*z - y^2"],
                       domain=True)


@pytest.fixture(scope="session")
def surface_mcm(surface):
    from hwprobe import PresentedModule
    return PresentedModule(surface, (0, 0), [
        {(0, (1, 0, 0)): 1, (1, (0, 1, 0)): 1},
        {(0, (0, 1, 0)): 1, (1, (0, 0, 1)): 1},
    ])


GP_IDEAL = ["x1^2", "x2^2", "x3^2", "x3*x4", "x4^2",
            "x1*x4 + x2*x4", "2*x1*x3 + x2*x3"]


def gp_matrix_cols(ring_q, n, alpha=2):
    """Columns of the n-th differential of the periodic two-generator module."""
    p = ring_q.ambient.p
    a = pow(alpha, n, p)
    nv = ring_q.ambient.nvars
    e = [tuple(1 if i == j else 0 for i in range(nv)) for j in range(nv)]
    col1 = {(0, e[0]): 1}
    col2 = {(0, e[2]): a, (0, e[3]): 1, (1, e[1]): 1}
    return [col1, col2]


@pytest.fixture(scope="session")
def gp_ring():
    return define_ring(["x1", "x2", "x3", "x4"], [1, 1, 1, 1], 5, GP_IDEAL)


@pytest.fixture(scope="session")
def gp_ring_t():
    return define_ring(["x1", "x2", "x3", "x4", "t"], [1, 1, 1, 1, 1], 5,
                       GP_IDEAL)


@pytest.fixture(scope="session")
def gp_module_t(gp_ring_t):
    from hwprobe import PresentedModule
    return PresentedModule(gp_ring_t, (0, 0), gp_matrix_cols(gp_ring_t, 1))


@pytest.fixture(scope="session")
def fermat_dim1():
    return define_ring(["x", "y"], [4, 3], 101, ["x^3 - y^4"], domain=True)


@pytest.fixture(scope="session")
def torus_dim1():
    return define_ring(["x", "y"], [5, 2], 101, ["x^2 - y^5"], domain=True)
