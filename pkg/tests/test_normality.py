import pytest

from hopfnormal.errors import HypothesisError
from hopfnormal.groups import all_subgroups, is_normal, normal_subgroups, subgroup_generated, trivial, whole
from hopfnormal.instances import catalog, supersolvable, symmetric, trivial_s
from hopfnormal.normality import (hopf_subalgebra_normal, is_simple_deformation,
                                  mu_stable_criterion, mu_stable_direct,
                                  prime_index_theorem_check)


def test_klein_f_a(klein, kl):
    A = klein.A
    F = subgroup_generated(A.G, [kl["a"]])
    v = mu_stable_criterion(A, F)
    assert v.stable and not v.witnesses
    assert sorted(v.regular_classes) == sorted([(0, 0), (0, kl["a"])])
    assert mu_stable_direct(A, F)


def test_trivial_f_always_stable():
    for inst in catalog():
        assert mu_stable_direct(inst.A, trivial(inst.G))


def test_f_equals_g(klein):
    A = klein.A
    v = hopf_subalgebra_normal(A, whole(A.G))
    assert v.stable and v.regular_classes == [(0, 0)]


def test_d4_rotations(d4):
    A = d4.A
    G = A.G
    F = subgroup_generated(G, [G.element("r")])
    v = hopf_subalgebra_normal(A, F)
    assert v.stable
    assert [G.labels[s] for _, s in v.regular_classes] == ["e", "r^2"]
    assert mu_stable_criterion(A, F).stable


def test_not_normal_rejected(d4):
    G = d4.G
    F = subgroup_generated(G, [G.element("f")])
    assert not is_normal(G, F)
    with pytest.raises(HypothesisError):
        hopf_subalgebra_normal(d4.A, F)


def test_s5_odd_unstable_with_witness():
    inst = symmetric(5, "odd")
    A = inst.A
    A5 = normal_subgroups(A.G)[1]
    assert A5.order == 60
    v = hopf_subalgebra_normal(A, A5)
    assert not v.stable
    (b, f), *_ = v.witnesses
    x = A.mu_degree(b)
    assert f in A5 and A.G.mul[f][x] != A.G.mul[x][f]


@pytest.mark.parametrize("inst", [i for i in catalog() if i.G.order <= 24], ids=lambda i: i.name)
def test_criterion_matches_oracle_all_subgroups(inst):
    A = inst.A
    for F in all_subgroups(A.G):
        assert mu_stable_criterion(A, F).stable == mu_stable_direct(A, F)


@pytest.mark.parametrize("inst", catalog(), ids=lambda i: i.name)
def test_normal_shortcut_and_sanity(inst):
    A = inst.A
    for F in normal_subgroups(A.G):
        crit = mu_stable_criterion(A, F).stable
        assert hopf_subalgebra_normal(A, F).stable == crit
        if A.S.issubset(F) or A.S.order == 1:
            assert crit


def test_s3xd5_proper_normals_unstable():
    A = supersolvable(3, 2, 5).A
    for F in normal_subgroups(A.G):
        if 1 < F.order < A.G.order:
            assert not mu_stable_criterion(A, F).stable


@pytest.mark.parametrize("spec,simple", [
    ("cyclic:6", False),
    ("cyclic:5", True),
    ("alt:5", True),
    ("sym:3", False),
])
def test_trivial_s_simple_iff_group_simple(spec, simple):
    assert is_simple_deformation(trivial_s(spec).A).simple is simple


def test_classification_report(d4):
    rep = is_simple_deformation(d4.A)
    assert not rep.simple
    assert [r.F.order for r in rep.rows] == [F.order for F in normal_subgroups(d4.G)]
    s_row = [r for r in rep.rows if r.F == d4.S][0]
    assert s_row.contains_S and s_row.verdict.stable and s_row.index == 2


def test_parallel_rows_in_order(d4):
    one = is_simple_deformation(d4.A)
    many = is_simple_deformation(d4.A, jobs=2)
    assert [r.F for r in one.rows] == [r.F for r in many.rows]
    assert [r.verdict.stable for r in one.rows] == [r.verdict.stable for r in many.rows]


def test_prime_index_law():
    odd, even = symmetric(5, "odd"), symmetric(5, "even")
    A5 = normal_subgroups(odd.G)[1]
    assert prime_index_theorem_check(odd.A, A5) is False
    assert prime_index_theorem_check(even.A, normal_subgroups(even.G)[1]) is True
    A = supersolvable(3, 2, 5).A
    idx2 = [F for F in normal_subgroups(A.G) if F.index() == 2]
    assert idx2
    for F in idx2:
        assert prime_index_theorem_check(A, F) is False


def test_prime_index_hypotheses(d4):
    G = d4.G
    with pytest.raises(HypothesisError):  # D4 has a nontrivial centre
        prime_index_theorem_check(d4.A, subgroup_generated(G, [G.element("r")]))
    inst = symmetric(4, "odd")
    with pytest.raises(HypothesisError):  # Klein four has index 6
        prime_index_theorem_check(inst.A, normal_subgroups(inst.G)[1])
