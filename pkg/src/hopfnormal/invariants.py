"""F-orbits on ``G x_S S`` and the monomial basis of the invariants ``A^F``."""

from __future__ import annotations

from dataclasses import dataclass

from .cocycle import alpha_F_regular
from .cyclotomic import CycInt
from .galois import AlgebraElement, Basis, GaloisObject, MonomialVector, act
from .groups import Subgroup


@dataclass(frozen=True)
class FOrbit:
    F: Subgroup
    members: tuple[Basis, ...]
    representative: Basis
    stabilizer: Subgroup
    regular: bool

    def __len__(self) -> int:
        return len(self.members)


def f_orbits(A: GaloisObject, F: Subgroup) -> list[FOrbit]:
    """Partition the canonical basis into F-orbits, in order of representative.

    Regularity is decided by the cocycle criterion on the representative.
    """
    seen: set[Basis] = set()
    orbits = []
    for b in A.basis():
        if b in seen:
            continue
        members = set()
        stab = []
        for f in F.elements:
            b2, _ = A.act_basis(f, b)
            members.add(b2)
            if b2 == b:
                stab.append(f)
        seen |= members
        g = A.cosets.reps[b[0]]
        regular = alpha_F_regular(A.alpha, F, g, b[1])
        orbits.append(FOrbit(F, tuple(sorted(members)), b,
                             Subgroup(A.G, stab), regular))
    return orbits


def is_regular_orbit(A: GaloisObject, F: Subgroup, orbit: FOrbit) -> bool:
    i, s = orbit.representative
    return alpha_F_regular(A.alpha, F, A.cosets.reps[i], s)


def monomial_regular(A: GaloisObject, orbit: FOrbit) -> bool:
    """Oracle: every stabilizer element fixes the representative's line pointwise."""
    b = orbit.representative
    for f in orbit.stabilizer.elements:
        b2, e = A.act_basis(f, b)
        if b2 != b or e != 0:
            return False
    return True


def stabilizer_transversal(F: Subgroup, stab: Subgroup) -> list[int]:
    """Least element of each left coset ``h * stab`` in ``F``."""
    mul = F.parent.mul
    seen: set[int] = set()
    reps = []
    for h in F.elements:
        if h in seen:
            continue
        reps.append(h)
        seen.update(mul[h][t] for t in stab.elements)
    return reps


def orbit_vector(A: GaloisObject, F: Subgroup, orbit: FOrbit) -> MonomialVector:
    """``sum_{h in Y} h . rep`` over the transversal ``Y`` of the stabilizer."""
    m = A.modulus
    terms: dict[Basis, int] = {}
    for h in stabilizer_transversal(F, orbit.stabilizer):
        b2, e = A.act_basis(h, orbit.representative)
        terms[b2] = e
    return MonomialVector(m, terms)


def invariant_basis(A: GaloisObject, F: Subgroup) -> list[MonomialVector]:
    return [orbit_vector(A, F, o) for o in f_orbits(A, F) if o.regular]


def regular_orbit_count(A: GaloisObject, F: Subgroup) -> int:
    return sum(1 for o in f_orbits(A, F) if o.regular)


def is_invariant(A: GaloisObject, F: Subgroup, v) -> bool:
    """``act(f, v) == v`` for every generator ``f`` of F (hence all of F)."""
    if isinstance(v, MonomialVector):
        return all(act(A, f, v).terms == v.terms for f in F.generators())
    return all(act(A, f, v) == v for f in F.generators())


def reynolds(A: GaloisObject, F: Subgroup, b: Basis) -> AlgebraElement:
    """``sum_{f in F} f . b`` computed term by term (unnormalised average)."""
    m = A.modulus
    out: dict[Basis, CycInt] = {}
    for f in F.elements:
        b2, e = A.act_basis(f, b)
        c = CycInt.root(m, e)
        out[b2] = out[b2] + c if b2 in out else c
    return AlgebraElement(m, out)


def expand_in_basis(vectors: list[MonomialVector], x: AlgebraElement):
    """Coefficients of ``x`` against invariant basis vectors, or ``None``.

    The vectors have disjoint supports and coefficient 1 at their
    representative, so the coefficient of each is read off there and the
    reconstruction is checked exactly.
    """
    coeffs = []
    acc = AlgebraElement(x.modulus)
    for v in vectors:
        rep = min(v.terms)
        c = x.coeff(rep)
        coeffs.append(c)
        if not c.is_zero():
            acc = acc + v.to_algebra().scale(c)
    return coeffs if acc == x else None
