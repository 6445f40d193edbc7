"""Stability of ``A^F`` under the Miyashita-Ulbrich grading, and simplicity.

Two independent routes decide stability: a group-theoretic criterion over
regular orbit representatives, and a direct check that splits every
invariant basis vector into homogeneous components and tests each for
invariance.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .errors import ConsistencyError, HypothesisError
from .galois import Basis, GaloisObject, MonomialVector, mu_decomposition
from .groups import Subgroup, center, is_normal, normal_subgroups
from .invariants import (f_orbits, is_invariant, monomial_regular, orbit_vector)


@dataclass
class NormalityVerdict:
    stable: bool
    witnesses: list[tuple[Basis, int]] = field(default_factory=list)
    regular_classes: list[Basis] = field(default_factory=list)


@dataclass
class ClassificationRow:
    F: Subgroup
    verdict: NormalityVerdict
    index: int
    contains_S: bool

    @property
    def proper(self) -> bool:
        return 1 < self.F.order < self.F.parent.order


@dataclass
class ClassificationReport:
    rows: list[ClassificationRow]
    simple: bool


def _first_noncommuting(A: GaloisObject, F: Subgroup, x: int) -> Optional[int]:
    mul = A.G.mul
    for f in F.elements:
        if mul[f][x] != mul[x][f]:
            return f
    return None


def mu_stable_criterion(A: GaloisObject, F: Subgroup) -> NormalityVerdict:
    """Stable iff every regular class ``(g, s)`` has ``g^-1 F g ⊆ C_G(s)``.

    Works for any subgroup F. Each failing regular class contributes one
    witness: its representative and the first ``f`` in F not commuting with
    ``g s g^-1``.
    """
    witnesses = []
    regular = []
    for orb in f_orbits(A, F):
        if not orb.regular:
            continue
        b = orb.representative
        regular.append(b)
        f = _first_noncommuting(A, F, A.mu_degree(b))
        if f is not None:
            witnesses.append((b, f))
    return NormalityVerdict(not witnesses, witnesses, regular)


def oracle_invariant_basis(A: GaloisObject, F: Subgroup) -> list[MonomialVector]:
    """Invariant basis with regularity decided by the action itself."""
    return [orbit_vector(A, F, o) for o in f_orbits(A, F) if monomial_regular(A, o)]


def mu_stable_direct(A: GaloisObject, F: Subgroup) -> bool:
    """Stable iff every homogeneous component of every invariant basis
    vector is itself F-invariant."""
    for v in oracle_invariant_basis(A, F):
        if not is_invariant(A, F, v):
            raise ConsistencyError("orbit vector is not F-invariant")
        for comp in mu_decomposition(A, v).values():
            if not is_invariant(A, F, comp):
                return False
    return True


def hopf_subalgebra_normal(A: GaloisObject, F: Subgroup) -> NormalityVerdict:
    """Normal F only: stable iff ``F ⊆ C_G(s)`` for every (alpha, F)-regular ``s``."""
    G, alpha = A.G, A.alpha
    if F.parent is not G or not is_normal(G, F):
        raise HypothesisError("F must be a normal subgroup of G")
    mul = G.mul
    fm = F.membership
    witnesses = []
    regular = []
    for s in A.S.elements:
        ok = all(alpha(s, t) == alpha(t, s) for t in A.S.elements
                 if fm[t] and mul[s][t] == mul[t][s])
        if not ok:
            continue
        b = (0, s)
        regular.append(b)
        f = _first_noncommuting(A, F, s)
        if f is not None:
            witnesses.append((b, f))
    return NormalityVerdict(not witnesses, witnesses, regular)


def _row(args) -> ClassificationRow:
    A, F = args
    return ClassificationRow(F, hopf_subalgebra_normal(A, F), F.index(),
                             A.S.issubset(F))


def is_simple_deformation(A: GaloisObject, jobs: int = 1,
                          normals: Optional[list[Subgroup]] = None) -> ClassificationReport:
    """Run the normality test over every normal subgroup of G.

    The deformation is simple iff no proper nontrivial normal F is stable.
    Rows come back in the order of :func:`normal_subgroups` whatever ``jobs`` is.
    """
    if normals is None:
        normals = normal_subgroups(A.G)
    work = [(A, F) for F in normals]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_row, work))
        # rows carry copies of F; put the caller's objects back
        for r, F in zip(rows, normals):
            r.F = F
    else:
        rows = [_row(w) for w in work]
    simple = not any(r.proper and r.verdict.stable for r in rows)
    return ClassificationReport(rows, simple)


def prime_index_theorem_check(A: GaloisObject, F: Subgroup) -> bool:
    """For ``Z(G) = 1`` and F normal of prime index: stable iff ``S ⊆ F``."""
    G = A.G
    if center(G).order != 1:
        raise HypothesisError("G has a nontrivial center")
    if not is_normal(G, F):
        raise HypothesisError("F is not normal in G")
    p = F.index()
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise HypothesisError(f"[G:F] = {p} is not prime")
    stable = mu_stable_criterion(A, F).stable
    contains = A.S.issubset(F)
    if stable != contains:
        raise ConsistencyError(
            f"stability ({stable}) disagrees with S ⊆ F ({contains})")
    return stable
