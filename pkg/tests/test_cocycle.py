import pytest
from hypothesis import given, settings, strategies as st

from hopfnormal.cocycle import (OneCochain, TwoCocycle, alpha_F_regular, alpha_regular_elements,
                                bilinear_cocycle, cocycle_violations, conjugate_pair,
                                is_nondegenerate, iso_from_generators, multiply_by_coboundary,
                                normalize_inverse_pairs, standard_nondegenerate,
                                twisted_conjugation, validate)
from hopfnormal.errors import HypothesisError
from hopfnormal.groups import (all_subgroups, cyclic_group, direct_product, is_normal,
                               subgroup_generated, whole)
from hopfnormal.instances import catalog, klein_dihedral, symmetric


def z2z2():
    return direct_product(cyclic_group(2), cyclic_group(2))


def raw_bilinear():
    """(-1)^(b1 a2) on Z2 x Z2 at modulus 2; not inverse-normalized at c."""
    G = z2z2()
    S = whole(G)
    return TwoCocycle.from_function(S, 2, lambda x, y: (x % 2) * (y // 2))


def test_trivial_validates():
    S = whole(z2z2())
    assert validate(TwoCocycle.trivial(S))
    assert validate(TwoCocycle.trivial(S, 5))


def test_raw_bilinear_validates_exhaustively():
    alpha = raw_bilinear()
    assert validate(alpha)
    assert cocycle_violations(alpha, limit=None) == []


def test_perturbed_entry_reports_triple():
    S = whole(z2z2())
    table = [[0] * 4 for _ in range(4)]
    table[1][2] = 1
    bad = TwoCocycle(S, 2, tuple(map(tuple, table)))
    v = cocycle_violations(bad)
    assert v and not validate(bad)
    assert all(len(t) == 3 for t in v)


def test_unnormalized_reports_pair():
    S = whole(z2z2())
    table = [[0] * 4 for _ in range(4)]
    table[0][1] = 1
    assert (0, 1) in cocycle_violations(TwoCocycle(S, 2, tuple(map(tuple, table))))


def test_coboundary_identity():
    alpha = raw_bilinear()
    assert multiply_by_coboundary(alpha, OneCochain.trivial(alpha.S)) == alpha


def test_coboundary_to_normalized_beta():
    alpha = raw_bilinear()
    phi = OneCochain(alpha.S, 4, (0, 0, 0, 1))
    beta = multiply_by_coboundary(alpha, phi)
    assert beta.modulus == 4 and validate(beta)
    assert beta(3, 3) == 0


def test_normalize_inverse_pairs_worked_example():
    alpha = raw_bilinear()
    assert alpha(3, 3) == 1  # alpha(c, c) = -1
    beta, phi = normalize_inverse_pairs(alpha)
    a, b, c = 2, 1, 3
    assert beta.modulus == 4
    assert beta(c, c) == 0
    assert beta(a, b) == 3
    assert beta(b, a) == 1
    assert phi(c) == 1
    assert multiply_by_coboundary(alpha, phi) == beta


def test_normalize_noop_when_normalized(klein):
    beta, phi = normalize_inverse_pairs(klein.alpha)
    assert beta == klein.alpha
    assert all(v == 0 for v in phi.values)


def test_normalize_odd_order_keeps_modulus():
    inst = [i for i in catalog(["z3z3-self"])][0]
    beta, _ = normalize_inverse_pairs(inst.alpha)
    assert beta.modulus == 3


def test_regular_elements(klein, kl):
    assert alpha_regular_elements(TwoCocycle.trivial(klein.S)) == list(klein.S.elements)
    assert alpha_regular_elements(klein.alpha) == [0]
    assert is_nondegenerate(klein.alpha)
    assert not is_nondegenerate(TwoCocycle.trivial(klein.S))


def test_standard_nondegenerate():
    G = z2z2()
    S = whole(G)
    beta = standard_nondegenerate(2, S, iso_from_generators(S, 2, 1, 2))
    assert beta.modulus == 4 and beta.inverse_normalized and validate(beta)
    assert (beta(3, 3), beta(2, 1), beta(1, 2)) == (0, 3, 1)
    G3 = direct_product(cyclic_group(3), cyclic_group(3))
    S3 = whole(G3)
    beta3 = standard_nondegenerate(3, S3, iso_from_generators(S3, 3, 1, 3))
    assert beta3.modulus == 3 and is_nondegenerate(beta3) and validate(beta3)
    with pytest.raises(HypothesisError):
        standard_nondegenerate(4, S, iso_from_generators(S, 2, 1, 2))


def test_twisted_conjugation(klein, kl):
    alpha = klein.alpha
    for t in klein.S.elements:
        assert twisted_conjugation(alpha, 0, t) == (0, t)
    assert twisted_conjugation(alpha, kl["a"], kl["b"]) == (2, kl["b"])
    for s in klein.S.elements:
        assert twisted_conjugation(alpha, s, s) == (0, s)
    with pytest.raises(HypothesisError):
        twisted_conjugation(raw_bilinear(), 3, 1)


def test_twisted_conjugation_self_exhaustive():
    for inst in catalog():
        G, alpha = inst.G, inst.alpha
        for s in inst.S.elements:
            assert twisted_conjugation(alpha, s, s) == (0, s), inst.name


def test_f_regular_examples(klein, kl):
    G, S, alpha = klein.G, klein.S, klein.alpha
    for F in all_subgroups(G):
        assert alpha_F_regular(alpha, F, 0, 0)
    assert [s for s in S.elements if alpha_F_regular(alpha, S, 0, s)] == alpha_regular_elements(alpha)
    F = subgroup_generated(G, [kl["a"]])
    assert sorted(s for s in S.elements if alpha_F_regular(alpha, F, 0, s)) == sorted([0, kl["a"]])


FAMILY = [klein_dihedral(), symmetric(4, "odd"), symmetric(4, "even")] + catalog(["gdih-z3z3", "a4-klein"])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FAMILY), st.data())
def test_regularity_is_class_invariant(inst, data):
    G, S, alpha = inst.G, inst.S, inst.alpha
    F = data.draw(st.sampled_from(all_subgroups(G)))
    g = data.draw(st.integers(0, G.order - 1))
    s = data.draw(st.sampled_from(S.elements))
    t = data.draw(st.sampled_from(S.elements))
    ti = G.inv[t]
    assert alpha_F_regular(alpha, F, g, s) == alpha_F_regular(alpha, F, G.mul[g][ti], G.conj(t, s))
    if is_normal(G, F):
        h = data.draw(st.integers(0, G.order - 1))
        assert alpha_F_regular(alpha, F, g, s) == alpha_F_regular(alpha, F, h, s)


def test_conjugate_pair():
    inst = klein_dihedral()
    G, S, alpha = inst.G, inst.S, inst.alpha
    S1, a1 = conjugate_pair(0, S, alpha)
    assert S1 == S and a1 == alpha
    for g in S.elements:
        S2, a2 = conjugate_pair(g, S, alpha)
        assert S2 == S and is_nondegenerate(a2) and validate(a2)
    for g in range(G.order):
        S2, a2 = conjugate_pair(g, S, alpha)
        assert validate(a2) and a2.inverse_normalized
        moved = sorted(G.conj(g, s) for s in alpha_regular_elements(alpha))
        assert sorted(alpha_regular_elements(a2)) == moved


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=9, max_size=9))
def test_non_square_order_is_degenerate(form):
    """Bilinear cocycles on Z2^3 (order 8, not a square) are never non-degenerate."""
    G = direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))
    S = whole(G)

    def bits(x):
        return [(x >> 2) & 1, (x >> 1) & 1, x & 1]

    def f(x, y):
        u, v = bits(x), bits(y)
        return sum(form[3 * i + j] * u[i] * v[j] for i in range(3) for j in range(3)) % 2

    alpha = TwoCocycle.from_function(S, 2, f)
    assert validate(alpha)
    beta, _ = normalize_inverse_pairs(alpha)
    assert validate(beta)
    assert not is_nondegenerate(beta)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(catalog()), st.lists(st.integers(0, 11), min_size=64, max_size=64))
def test_coboundary_preserves_identity(inst, vals):
    k = inst.S.order
    phi = OneCochain(inst.S, 12, (0,) + tuple(vals[1:k]))
    beta = multiply_by_coboundary(inst.alpha, phi)
    assert validate(beta)


def test_normalization_symmetry_before_and_after():
    for inst in catalog():
        alpha = inst.alpha
        inv = inst.G.inv
        for s in inst.S.elements:
            assert alpha(s, inv[s]) == alpha(inv[s], s)
        beta, _ = normalize_inverse_pairs(alpha)
        assert all(beta(s, inv[s]) == 0 for s in inst.S.elements)


def test_bilinear_requires_generators():
    G = z2z2()
    S = whole(G)
    with pytest.raises(HypothesisError):
        bilinear_cocycle(2, S, 2, 2)
