import pytest
from hypothesis import given, settings, strategies as st

from hopfnormal.cocycle import TwoCocycle, twisted_conjugation
from hopfnormal.cyclotomic import CycInt
from hopfnormal.errors import HypothesisError
from hopfnormal.galois import (AlgebraElement, act, action_trace, basis_vector, build,
                               format_basis, mu_component, mu_decomposition, mu_degree,
                               multiply)
from hopfnormal.instances import catalog, trivial_s


def E(A, b, e=0):
    return AlgebraElement.basis(A.modulus, b, e)


def test_dimensions(klein, d4):
    assert klein.A.dim == 4 and len(klein.A.cosets.reps) == 1
    assert d4.A.dim == 8 and len(d4.A.cosets.reps) == 2
    t = trivial_s("sym:3")
    assert t.A.dim == 6


def test_build_rejects_bad_cocycles(klein):
    with pytest.raises(HypothesisError):
        build(klein.G, klein.S, TwoCocycle.trivial(klein.S))
    raw = TwoCocycle.from_function(klein.S, 2, lambda x, y: (x % 2) * (y // 2))
    with pytest.raises(HypothesisError):
        build(klein.G, klein.S, raw)


def test_identity_acts_trivially(d4):
    A = d4.A
    for b in A.basis():
        assert act(A, 0, E(A, b)) == E(A, b)


def test_act_matches_twisted_conjugation(klein, kl):
    A = klein.A
    c, t = twisted_conjugation(klein.alpha, kl["a"], kl["b"])
    assert act(A, kl["a"], E(A, (0, kl["b"]))) == E(A, (0, t), c)
    assert c == 2


def test_act_is_group_action(d4):
    A = d4.A
    G = A.G
    for g in range(G.order):
        for h in range(G.order):
            for b in A.basis():
                v = E(A, b)
                assert act(A, g, act(A, h, v)) == act(A, G.mul[g][h], v)


def test_act_on_monomial_vectors(d4):
    A = d4.A
    v = basis_vector(A, (1, 4), 1)
    for g in range(A.G.order):
        assert act(A, g, v).to_algebra() == act(A, g, v.to_algebra())


def test_multiply_g_equals_s(klein):
    A = klein.A
    for s in A.S.elements:
        for t in A.S.elements:
            st_ = A.G.mul[s][t]
            assert multiply(A, E(A, (0, s)), E(A, (0, t))) == E(A, (0, st_), klein.alpha(s, t))


def test_left_identity_on_blocks(d4):
    A = d4.A
    for i in range(len(A.cosets.reps)):
        for b in A.basis():
            expect = E(A, b) if b[0] == i else AlgebraElement(A.modulus, {})
            assert multiply(A, E(A, (i, 0)), E(A, b)) == expect


def test_trivial_s_gives_orthogonal_idempotents():
    inst = trivial_s("dihedral:3")
    A = inst.A
    for i in range(A.dim):
        for j in range(A.dim):
            p = multiply(A, E(A, (i, 0)), E(A, (j, 0)))
            assert p == (E(A, (j, 0)) if i == j else AlgebraElement(A.modulus, {}))


def test_unit_is_sum_of_block_identities(d4):
    A = d4.A
    one = sum((E(A, (i, 0)) for i in range(len(A.cosets.reps))), AlgebraElement(A.modulus, {}))
    for b in A.basis():
        assert multiply(A, one, E(A, b)) == E(A, b) == multiply(A, E(A, b), one)


def test_mu_degree(klein, d4):
    for s in klein.S.elements:
        assert mu_degree(klein.A, (0, s)) == s
    for i in range(2):
        assert mu_degree(d4.A, (i, 0)) == 0
    G = d4.G
    assert mu_degree(d4.A, (1, G.element("f"))) == G.element("r^2f")
    assert format_basis(d4.A, (1, G.element("f"))) == "(r ⊗ x_f)"


def test_mu_component(d4):
    A = d4.A
    f = A.G.element("f")
    v = E(A, (0, f)) + E(A, (1, f))
    assert mu_component(A, v, f) == E(A, (0, f))
    assert mu_component(A, v, A.G.element("r^2f")) == E(A, (1, f))
    assert mu_component(A, E(A, (0, f)), 0).is_zero()
    parts = mu_decomposition(A, v)
    total = AlgebraElement(A.modulus, {})
    for p in parts.values():
        total = total + p
    assert total == v


@pytest.mark.parametrize("inst", catalog(), ids=lambda i: i.name)
def test_trace_is_regular_character(inst):
    A = inst.A
    for g in range(A.G.order):
        assert action_trace(A, g) == CycInt.from_int(A.modulus, A.G.order if g == 0 else 0)


SMALL = [i for i in catalog() if i.G.order <= 12]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_grading_rule(inst, data):
    """b x = (g . x) b for b of degree g, and degrees multiply."""
    A = inst.A
    b = data.draw(st.sampled_from(A.basis()))
    x = data.draw(st.sampled_from(A.basis()))
    g = A.mu_degree(b)
    lhs = multiply(A, E(A, b), E(A, x))
    assert lhs == multiply(A, act(A, g, E(A, x)), E(A, b))
    if not lhs.is_zero():
        assert set(mu_decomposition(A, lhs)) == {A.G.mul[g][A.mu_degree(x)]}


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_action_by_algebra_automorphisms(inst, data):
    A = inst.A
    g = data.draw(st.integers(0, A.G.order - 1))
    u = E(A, data.draw(st.sampled_from(A.basis())), data.draw(st.integers(0, 11)))
    w = E(A, data.draw(st.sampled_from(A.basis())))
    assert act(A, g, multiply(A, u, w)) == multiply(A, act(A, g, u), act(A, g, w))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_associativity_sampled(inst, data):
    A = inst.A
    x, y, z = (E(A, data.draw(st.sampled_from(A.basis()))) for _ in range(3))
    assert multiply(A, multiply(A, x, y), z) == multiply(A, x, multiply(A, y, z))


def test_modulus_mismatch(d4):
    A = d4.A
    with pytest.raises(HypothesisError):
        multiply(A, AlgebraElement.basis(3, (0, 0)), AlgebraElement.basis(3, (0, 0)))
