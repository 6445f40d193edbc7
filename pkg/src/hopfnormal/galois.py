"""The Galois object ``A(G, S, alpha) = kG ⊗_{kS} k_alpha S``.

Basis elements are pairs ``(i, s)`` standing for ``g_i ⊗ x_s`` where
``g_i`` is the i-th left coset representative of ``S``. Every action and
product is immediately rewritten in this canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

from .cocycle import TwoCocycle, is_nondegenerate, twisted_conjugation, validate
from .cyclotomic import CycInt
from .errors import HypothesisError
from .groups import CosetDecomposition, FiniteGroup, Subgroup, left_coset_decomposition

Basis = tuple[int, int]


@dataclass
class MonomialVector:
    """Sparse sum ``sum zeta^e b``; ``terms`` maps basis elements to exponents."""

    modulus: int
    terms: dict[Basis, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {b: e % self.modulus for b, e in self.terms.items()}

    def support(self) -> list[Basis]:
        return sorted(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def to_algebra(self) -> "AlgebraElement":
        m = self.modulus
        return AlgebraElement(m, {b: CycInt.root(m, e) for b, e in self.terms.items()})


@dataclass
class AlgebraElement:
    """Sparse sum with cyclotomic coefficients; zero coefficients are dropped."""

    modulus: int
    terms: dict[Basis, CycInt] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {b: c for b, c in self.terms.items() if not c.is_zero()}

    @classmethod
    def basis(cls, m: int, b: Basis, e: int = 0) -> "AlgebraElement":
        return cls(m, {b: CycInt.root(m, e)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _same_modulus(self, other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out[b] + c if b in out else c
        return AlgebraElement(self.modulus, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(CycInt.from_int(other.modulus, -1))

    def scale(self, c: CycInt) -> "AlgebraElement":
        return AlgebraElement(self.modulus, {b: c * v for b, v in self.terms.items()})

    def coeff(self, b: Basis) -> CycInt:
        return self.terms.get(b, CycInt.zero(self.modulus))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.modulus == other.modulus and self.terms == other.terms


Element = Union[MonomialVector, AlgebraElement]


def _same_modulus(a, b) -> None:
    if a.modulus != b.modulus:
        raise HypothesisError(f"modulus mismatch: {a.modulus} vs {b.modulus}")


def _as_algebra(v: Element) -> AlgebraElement:
    return v.to_algebra() if isinstance(v, MonomialVector) else v


@dataclass(eq=False)
class GaloisObject:
    G: FiniteGroup
    S: Subgroup
    alpha: TwoCocycle
    cosets: CosetDecomposition

    @property
    def modulus(self) -> int:
        return self.alpha.modulus

    @property
    def dim(self) -> int:
        return len(self.cosets) * self.S.order

    def basis(self) -> list[Basis]:
        """Canonical basis ordered by coset index, then S-element."""
        return [(i, s) for i in range(len(self.cosets)) for s in self.S.elements]

    def __iter__(self) -> Iterator[Basis]:
        return iter(self.basis())

    # -- G-action ---------------------------------------------------------

    def canonical(self, g: int, s: int) -> tuple[Basis, int]:
        """Rewrite ``g ⊗ x_s`` as ``zeta^e (g_j ⊗ x_{t s t^-1})`` with ``g = g_j t``."""
        G, a = self.G, self.alpha
        j, t = self.cosets.rep_of[g]
        if t == 0:
            return (j, s), 0
        ts = G.mul[t][s]
        ti = G.inv[t]
        e = (a(t, s) + a(ts, ti)) % a.modulus
        return (j, G.mul[ts][ti]), e

    def act_basis(self, g: int, b: Basis) -> tuple[Basis, int]:
        i, s = b
        return self.canonical(self.G.mul[g][self.cosets.reps[i]], s)

    # -- grading ----------------------------------------------------------

    def mu_degree(self, b: Basis) -> int:
        """Degree ``g_i s g_i^-1`` in the Miyashita-Ulbrich grading."""
        i, s = b
        return self.G.conj(self.cosets.reps[i], s)

    # -- products ---------------------------------------------------------

    def basis_product(self, b1: Basis, b2: Basis) -> Optional[tuple[Basis, int]]:
        """``(g ⊗ x_s)(h ⊗ x_t)``: zero unless ``u = h^-1 g`` lies in S, else
        ``h ⊗ (u ▷ x_s) x_t``. Returns ``None`` for zero."""
        G, a = self.G, self.alpha
        (i, s), (j, t) = b1, b2
        g, h = self.cosets.reps[i], self.cosets.reps[j]
        u = G.mul[G.inv[h]][g]
        if u not in self.S:
            return None
        c, s2 = twisted_conjugation(a, u, s)
        e = (c + a(s2, t)) % a.modulus
        return (j, G.mul[s2][t]), e


def build(G: FiniteGroup, S: Subgroup, alpha: TwoCocycle) -> GaloisObject:
    """Assemble ``A(G, S, alpha)``; ``alpha`` must be valid, inverse-normalized
    and non-degenerate on ``S``."""
    if S.parent is not G or alpha.S != S:
        raise HypothesisError("S must be a subgroup of G carrying alpha")
    if not validate(alpha):
        raise HypothesisError("alpha is not a normalized 2-cocycle")
    if not alpha.inverse_normalized:
        raise HypothesisError("alpha must satisfy alpha(s, s^-1) = 1")
    if not is_nondegenerate(alpha):
        raise HypothesisError("alpha is degenerate")
    return GaloisObject(G, S, alpha, left_coset_decomposition(G, S))


def act(A: GaloisObject, g: int, v: Element) -> Element:
    """Left action of ``g``, on monomial or general elements."""
    if isinstance(v, MonomialVector):
        out: dict[Basis, int] = {}
        for b, e in v.terms.items():
            b2, e2 = A.act_basis(g, b)
            out[b2] = e + e2
        return MonomialVector(v.modulus, out)
    outa: dict[Basis, CycInt] = {}
    for b, c in v.terms.items():
        b2, e2 = A.act_basis(g, b)
        outa[b2] = c.times_root(e2)
    return AlgebraElement(v.modulus, outa)


def multiply(A: GaloisObject, u: Element, w: Element) -> AlgebraElement:
    u, w = _as_algebra(u), _as_algebra(w)
    _same_modulus(u, w)
    m = u.modulus
    if m != A.modulus:
        raise HypothesisError(f"modulus mismatch: element {m} vs algebra {A.modulus}")
    out: dict[Basis, CycInt] = {}
    for b1, c1 in u.terms.items():
        for b2, c2 in w.terms.items():
            p = A.basis_product(b1, b2)
            if p is None:
                continue
            b, e = p
            term = (c1 * c2).times_root(e)
            out[b] = out[b] + term if b in out else term
    return AlgebraElement(m, out)


def mu_degree(A: GaloisObject, b: Basis) -> int:
    return A.mu_degree(b)


def mu_component(A: GaloisObject, v: Element, sigma: int) -> Element:
    """Homogeneous component of ``v`` of degree ``sigma``."""
    terms = {b: c for b, c in v.terms.items() if A.mu_degree(b) == sigma}
    return type(v)(v.modulus, terms)


def mu_decomposition(A: GaloisObject, v: Element) -> dict[int, Element]:
    """All nonzero homogeneous components, keyed by degree."""
    parts: dict[int, dict] = {}
    for b, c in v.terms.items():
        parts.setdefault(A.mu_degree(b), {})[b] = c
    return {d: type(v)(v.modulus, t) for d, t in sorted(parts.items())}


def basis_vector(A: GaloisObject, b: Basis, e: int = 0) -> MonomialVector:
    return MonomialVector(A.modulus, {b: e})


def action_trace(A: GaloisObject, g: int) -> CycInt:
    """Trace of the matrix of ``g`` acting on the canonical basis."""
    m = A.modulus
    tr = CycInt.zero(m)
    for b in A.basis():
        b2, e = A.act_basis(g, b)
        if b2 == b:
            tr = tr + CycInt.root(m, e)
    return tr


def format_basis(A: GaloisObject, b: Basis) -> str:
    i, s = b
    lab = A.G.labels
    return f"({lab[A.cosets.reps[i]]} ⊗ x_{lab[s]})"


def format_element(A: GaloisObject, v: Element) -> str:
    """Deterministic rendering, one term per basis element in canonical order."""
    if not v.terms:
        return "0"
    pos = {s: k for k, s in enumerate(A.S.elements)}
    terms = []
    for b in sorted(v.terms, key=lambda b: (b[0], pos[b[1]])):
        c = v.terms[b]
        if isinstance(v, MonomialVector):
            coef = f"z{v.modulus}^{c}"
        else:
            coef = f"[{c}]"
        terms.append(f"{coef}·{format_basis(A, b)}")
    return " + ".join(terms)


def elements_equal(u: Element, w: Element) -> bool:
    return _as_algebra(u) == _as_algebra(w)


def span_check(vectors: Iterable[MonomialVector]) -> bool:
    """True iff the supports of the vectors are pairwise disjoint."""
    seen: set[Basis] = set()
    for v in vectors:
        sup = set(v.terms)
        if sup & seen:
            return False
        seen |= sup
    return True
