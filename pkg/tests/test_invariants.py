import pytest

from hopfnormal.galois import AlgebraElement, span_check
from hopfnormal.groups import all_subgroups, subgroup_generated, trivial, whole
from hopfnormal.invariants import (expand_in_basis, f_orbits, invariant_basis, is_invariant,
                                   is_regular_orbit, monomial_regular, regular_orbit_count,
                                   reynolds)
from hopfnormal.instances import catalog

SMALL = [i for i in catalog() if i.G.order <= 24]


def test_trivial_f(d4):
    A = d4.A
    F = trivial(A.G)
    orbits = f_orbits(A, F)
    assert len(orbits) == A.G.order and all(len(o) == 1 for o in orbits)
    assert len(invariant_basis(A, F)) == A.G.order
    assert regular_orbit_count(A, F) == A.G.order


def test_klein_f_a(klein, kl):
    A = klein.A
    F = subgroup_generated(A.G, [kl["a"]])
    orbits = f_orbits(A, F)
    assert len(orbits) == 4 and all(len(o) == 1 for o in orbits)
    regular = sorted(o.representative for o in orbits if is_regular_orbit(A, F, o))
    assert regular == sorted([(0, 0), (0, kl["a"])])
    basis = invariant_basis(A, F)
    assert sorted(tuple(v.terms) for v in basis) == sorted([((0, 0),), ((0, kl["a"]),)])
    assert len(basis) == F.index() == 2


def test_regular_orbit_counts(klein, d4):
    assert regular_orbit_count(klein.A, whole(klein.G)) == 1
    F = subgroup_generated(d4.G, [d4.G.element("r")])
    assert regular_orbit_count(d4.A, F) == 2


@pytest.mark.parametrize("inst", SMALL, ids=lambda i: i.name)
def test_orbit_structure(inst):
    A = inst.A
    for F in all_subgroups(A.G):
        orbits = f_orbits(A, F)
        assert sum(len(o) for o in orbits) == A.dim
        for o in orbits:
            assert len(o) * o.stabilizer.order == F.order
            assert o.regular == monomial_regular(A, o)
            if o.representative[1] == 0:
                assert o.regular


@pytest.mark.parametrize("inst", SMALL, ids=lambda i: i.name)
def test_invariant_basis_is_a_basis(inst):
    """Vectors are invariant, have disjoint supports, and span every Reynolds image."""
    A = inst.A
    for F in all_subgroups(A.G):
        vecs = invariant_basis(A, F)
        assert len(vecs) == F.index()
        assert span_check(vecs)
        assert all(is_invariant(A, F, v) for v in vecs)
        for b in A.basis():
            r = reynolds(A, F, b)
            assert is_invariant(A, F, r)
            assert expand_in_basis(vecs, r) is not None


def test_expand_rejects_non_invariant(d4):
    A = d4.A
    F = subgroup_generated(A.G, [A.G.element("r")])
    vecs = invariant_basis(A, F)
    assert expand_in_basis(vecs, AlgebraElement.basis(A.modulus, (0, 0))) is None
