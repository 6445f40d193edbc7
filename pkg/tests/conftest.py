import pytest

from hopfnormal.instances import klein_dihedral, klein_self


@pytest.fixture(scope="session")
def klein():
    """G = S = Z2 x Z2 with the normalized bilinear cocycle at modulus 4."""
    return klein_self()


@pytest.fixture(scope="session")
def d4():
    """D4 with S = {e, r^2, f, r^2f}."""
    return klein_dihedral()


def labels(klein_inst):
    G = klein_inst.G
    return {"1": 0, "a": G.element("(1,0)"), "b": G.element("(0,1)"), "c": G.element("(1,1)")}


@pytest.fixture(scope="session")
def kl(klein):
    return labels(klein)
