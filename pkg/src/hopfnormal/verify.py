"""Property suites run by ``hopfnormal verify`` and by the acceptance tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional

from .cocycle import (alpha_regular_elements, multiply_by_coboundary,
                      normalize_inverse_pairs, validate)
from .cyclotomic import CycInt
from .errors import ConsistencyError, HopfNormalError
from .galois import (AlgebraElement, GaloisObject, action_trace, act, multiply,
                     mu_decomposition)
from .groups import all_subgroups, center, is_normal, normal_subgroups
from .instances import Instance
from .invariants import (expand_in_basis, f_orbits, invariant_basis, is_invariant,
                         monomial_regular, regular_orbit_count)
from .normality import hopf_subalgebra_normal, mu_stable_criterion, mu_stable_direct, \
    prime_index_theorem_check

EXHAUSTIVE_ORDER = 24
SAMPLED_TRIPLES = 10_000


@dataclass
class SuiteResult:
    suite: str
    instance: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, msg: str) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(msg)


def subgroups_to_test(A: GaloisObject):
    """All subgroups for small groups, normal subgroups otherwise."""
    if A.G.order <= EXHAUSTIVE_ORDER:
        return all_subgroups(A.G)
    return normal_subgroups(A.G)


def _basis_elem(A: GaloisObject, b) -> AlgebraElement:
    return AlgebraElement.basis(A.modulus, b)


def _triples(A: GaloisObject, rng: random.Random):
    basis = A.basis()
    if A.dim <= EXHAUSTIVE_ORDER:
        for x in basis:
            for y in basis:
                for z in basis:
                    yield x, y, z
    else:
        for _ in range(SAMPLED_TRIPLES):
            yield rng.choice(basis), rng.choice(basis), rng.choice(basis)


def suite_group(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    G = inst.G
    res.check(G.check_axioms(), "group axioms")
    res.check(inst.S.is_valid(), "S is a subgroup")
    for N in normal_subgroups(G):
        res.check(is_normal(G, N), f"normal subgroup of order {N.order} is not normal")


def suite_cocycle(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    alpha = inst.alpha
    G, S = inst.G, inst.S
    res.check(validate(alpha), "cocycle identity / normalization")
    res.check(alpha.inverse_normalized, "alpha(s, s^-1) = 1")
    reg = set(alpha_regular_elements(alpha))
    res.check(0 in reg, "identity is regular")
    for s in S.elements:
        for t in S.elements:
            res.check((G.conj(t, s) in reg) == (s in reg),
                      "regularity not constant on S-classes")


def suite_normalization(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    alpha = inst.alpha
    beta, phi = normalize_inverse_pairs(alpha)
    inv = inst.G.inv
    res.check(validate(beta), "normalized cocycle validates")
    res.check(all(beta(s, inv[s]) == 0 for s in inst.S.elements), "beta(s, s^-1) = 1")
    res.check(multiply_by_coboundary(alpha, phi) == beta, "beta = alpha * d(phi)")


def suite_associativity(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    A = inst.A
    cache: dict = {}

    def el(b):
        if b not in cache:
            cache[b] = _basis_elem(A, b)
        return cache[b]

    for x, y, z in _triples(A, rng):
        left = multiply(A, multiply(A, el(x), el(y)), el(z))
        right = multiply(A, el(x), multiply(A, el(y), el(z)))
        res.check(left == right, f"associativity fails at {x} {y} {z}")
        if len(res.failures) > 5:
            return


def suite_grading(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    A = inst.A
    basis = A.basis()
    if A.dim <= EXHAUSTIVE_ORDER:
        pairs = [(b, x) for b in basis for x in basis]
    else:
        pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(SAMPLED_TRIPLES)]
    mul = A.G.mul
    for b, x in pairs:
        g = A.mu_degree(b)
        eb, ex = _basis_elem(A, b), _basis_elem(A, x)
        res.check(multiply(A, eb, ex) == multiply(A, act(A, g, ex), eb),
                  f"b x != (g.x) b at {b} {x}")
        prod = multiply(A, eb, ex)
        if not prod.is_zero():
            degs = set(mu_decomposition(A, prod))
            res.check(degs == {mul[g][A.mu_degree(x)]}, f"grading not multiplicative at {b} {x}")
        if len(res.failures) > 5:
            return


def suite_action(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    """act is a group action by algebra automorphisms (sampled)."""
    A = inst.A
    G = A.G
    basis = A.basis()
    for _ in range(min(200, A.dim * A.dim)):
        g, h = rng.randrange(G.order), rng.randrange(G.order)
        b, c = rng.choice(basis), rng.choice(basis)
        v = _basis_elem(A, b)
        res.check(act(A, g, act(A, h, v)) == act(A, G.mul[g][h], v), "act(g, act(h, v))")
        w = _basis_elem(A, c)
        res.check(act(A, g, multiply(A, v, w)) == multiply(A, act(A, g, v), act(A, g, w)),
                  "g.(vw) != (g.v)(g.w)")


def suite_trace(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    A = inst.A
    m = A.modulus
    for g in range(A.G.order):
        expect = CycInt.from_int(m, A.G.order if g == 0 else 0)
        res.check(action_trace(A, g) == expect, f"trace of {A.G.labels[g]}")


def suite_dimension(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    A = inst.A
    for F in subgroups_to_test(A):
        orbits = f_orbits(A, F)
        res.check(sum(len(o) for o in orbits) == A.dim, "orbits partition the basis")
        for o in orbits:
            res.check(len(o) * o.stabilizer.order == F.order, "orbit-stabilizer")
            res.check(o.regular == monomial_regular(A, o), f"regularity mismatch at {o.representative}")
        vecs = invariant_basis(A, F)
        res.check(len(vecs) == F.index(), f"dim A^F != [G:F] for |F|={F.order}")
        res.check(regular_orbit_count(A, F) == F.index(), "regular orbit count")
        res.check(all(is_invariant(A, F, v) for v in vecs), "basis vector not invariant")


def suite_subalgebra(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    A = inst.A
    if A.G.order > EXHAUSTIVE_ORDER:
        return
    for F in subgroups_to_test(A):
        vecs = invariant_basis(A, F)
        for v in vecs:
            for w in vecs:
                p = multiply(A, v, w)
                res.check(expand_in_basis(vecs, p) is not None,
                          f"A^F not closed under products for |F|={F.order}")


def suite_criterion(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    A = inst.A
    G = A.G
    for F in subgroups_to_test(A):
        crit = mu_stable_criterion(A, F)
        res.check(crit.stable == mu_stable_direct(A, F),
                  f"criterion/oracle disagree for |F|={F.order} {F.elements[:6]}")
        if is_normal(G, F):
            res.check(hopf_subalgebra_normal(A, F).stable == crit.stable,
                      f"normal-F shortcut disagrees for |F|={F.order}")
            if A.S.issubset(F):
                res.check(crit.stable, "S ⊆ F normal but not stable")
            if A.S.order == 1:
                res.check(crit.stable, "trivial cocycle but not stable")


def suite_prime_index(inst: Instance, res: SuiteResult, rng: random.Random) -> None:
    A = inst.A
    if center(A.G).order != 1:
        return
    for F in normal_subgroups(A.G):
        p = F.index()
        if p > 1 and all(p % d for d in range(2, p)):
            try:
                prime_index_theorem_check(A, F)
                res.check(True, "")
            except ConsistencyError as e:
                res.check(False, str(e))


SUITES: dict[str, Callable[[Instance, SuiteResult, random.Random], None]] = {
    "group": suite_group,
    "cocycle": suite_cocycle,
    "normalization": suite_normalization,
    "associativity": suite_associativity,
    "grading": suite_grading,
    "action": suite_action,
    "trace": suite_trace,
    "dimension": suite_dimension,
    "subalgebra": suite_subalgebra,
    "criterion": suite_criterion,
    "prime-index": suite_prime_index,
}


def inject_fault(inst: Instance) -> Optional[Instance]:
    """Copy of ``inst`` with one off-diagonal cocycle entry flipped, or None.

    The corrupted cocycle bypasses :func:`build` validation on purpose.
    """
    alpha = inst.alpha
    inv = inst.G.inv
    els = alpha.S.elements
    for i, s in enumerate(els):
        for j, t in enumerate(els):
            if s and t and t != inv[s]:
                table = [list(r) for r in alpha.table]
                table[i][j] = (table[i][j] + max(1, alpha.modulus // 2)) % alpha.modulus
                if alpha.modulus == 1:
                    return None
                bad = replace(alpha, table=tuple(tuple(r) for r in table))
                out = replace(inst, alpha=bad, name=inst.name + "+fault")
                out._A = GaloisObject(inst.G, inst.S, bad, inst.A.cosets)
                return out
    return None


def run_suites(instances: Iterable[Instance], suites: Optional[list[str]] = None,
               seed: int = 0) -> list[SuiteResult]:
    names = list(SUITES) if not suites else suites
    out = []
    for inst in instances:
        for name in names:
            res = SuiteResult(name, inst.name)
            try:
                SUITES[name](inst, res, random.Random(seed))
            except HopfNormalError as e:
                res.failures.append(f"{type(e).__name__}: {e}")
            out.append(res)
    return out
