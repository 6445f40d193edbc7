"""Built-in instances: the running examples and the three example families."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .cocycle import TwoCocycle, bilinear_cocycle
from .errors import HypothesisError
from .galois import GaloisObject, build
from .groups import (DEFAULT_MAX_ORDER, FiniteGroup, Subgroup, alternating_group,
                     cyclic_group, dihedral_group, direct_product, group_from_generators,
                     perm_from_cycles, semidirect_product, subgroup_generated,
                     symmetric_group, trivial)


@dataclass
class Instance:
    """A ready-to-analyse triple ``(G, S, alpha)`` plus how it was written down.

    ``group_spec``, ``s_labels`` and ``cocycle_lines`` reproduce the instance
    through the text loader.
    """

    name: str
    G: FiniteGroup
    S: Subgroup
    alpha: TwoCocycle
    group_spec: str
    s_labels: list[str]
    cocycle_lines: list[str]
    note: str = ""
    _A: Optional[GaloisObject] = field(default=None, repr=False)

    @property
    def A(self) -> GaloisObject:
        if self._A is None:
            self._A = build(self.G, self.S, self.alpha)
        return self._A


def _bilinear(name: str, G: FiniteGroup, spec: str, q: int, a: str, b: str,
              note: str = "") -> Instance:
    x, y = G.element(a), G.element(b)
    S = subgroup_generated(G, [x, y])
    alpha = bilinear_cocycle(q, S, x, y)
    lines = [f"builtin=bilinear:{q}", f"a={G.labels[x]}", f"b={G.labels[y]}"]
    return Instance(name, G, S, alpha, spec, [G.labels[x], G.labels[y]], lines, note)


def _trivial_s(name: str, G: FiniteGroup, spec: str, note: str = "") -> Instance:
    S = trivial(G)
    return Instance(name, G, S, TwoCocycle.trivial(S), spec, [], ["builtin=trivial"], note)


# -- group constructors for the families ------------------------------------


def unit_of_order(q: int, p: int) -> int:
    """Smallest ``u > 1`` of multiplicative order exactly ``q`` modulo ``p``."""
    for u in range(2, p):
        if pow(u, q, p) == 1 and all(pow(u, k, p) != 1 for k in range(1, q)):
            return u
    raise HypothesisError(f"no unit of order {q} modulo {p}")


def metacyclic(p: int, q: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """The nonabelian ``Z_p ⋊ Z_q`` (``q | p - 1``)."""
    u = unit_of_order(q, p)
    N, H = cyclic_group(p), cyclic_group(q)
    action = [[(n * pow(u, h, p)) % p for n in range(p)] for h in range(q)]
    return semidirect_product(N, H, action, max_order)


def inner_semidirect(F: FiniteGroup, x: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """``F ⋊ Z_p`` where the generator of ``Z_p`` acts by conjugation by ``x``."""
    p = F.element_order(x)
    H = cyclic_group(p)
    action = np.zeros((p, F.order), dtype=np.int64)
    xh = 0
    for h in range(p):
        action[h] = [F.conj(xh, n) for n in range(F.order)]
        xh = F.mul[xh][x]
    return semidirect_product(F, H, action, max_order)


# -- instances ---------------------------------------------------------------


def klein_dihedral() -> Instance:
    G = dihedral_group(4)
    return _bilinear("klein-dihedral", G, "dihedral:4", 2, "r^2", "f",
                     "D4 with S = {e, r^2, f, r^2f}")


def klein_dihedral_alt() -> Instance:
    G = dihedral_group(4)
    return _bilinear("klein-dihedral-alt", G, "dihedral:4", 2, "r^2", "rf",
                     "D4 with S = {e, r^2, rf, r^3f}")


def klein_self() -> Instance:
    G = direct_product(cyclic_group(2), cyclic_group(2))
    return _bilinear("klein-self", G, "product:(cyclic:2)x(cyclic:2)", 2, "(1,0)", "(0,1)",
                     "G = S = Z2 x Z2")


def z3z3_self() -> Instance:
    G = direct_product(cyclic_group(3), cyclic_group(3))
    return _bilinear("z3z3-self", G, "product:(cyclic:3)x(cyclic:3)", 3, "(1,0)", "(0,1)",
                     "G = S = Z3 x Z3")


def symmetric(n: int, variant: str) -> Instance:
    """``S_n`` with ``S = <(01),(23)>`` (``odd``) or ``<(01)(23),(02)(13)>`` (``even``)."""
    if n < 4:
        raise HypothesisError("symmetric family needs n >= 4")
    G = symmetric_group(n)
    if variant == "odd":
        a, b = "(01)", "(23)"
    elif variant == "even":
        a, b = "(01)(23)", "(02)(13)"
    else:
        raise HypothesisError(f"unknown variant {variant!r}")
    return _bilinear(f"symmetric:{n}:{variant}", G, f"sym:{n}", 2, a, b,
                     f"S{n} with S {'not ' if variant == 'odd' else ''}inside A{n}")


def alternating_klein() -> Instance:
    G = alternating_group(4)
    return _bilinear("a4-klein", G, "alt:4", 2, "(01)(23)", "(02)(13)", "A4 with S = V4")


def nonsolvable(p: int, max_order: int = DEFAULT_MAX_ORDER) -> Instance:
    """``A5 ⋊ Z_p`` (conjugation by an element ``x`` of order p), ``S = <x> x Z_p``."""
    xs = {2: "(01)(23)", 3: "(012)", 5: "(01234)"}
    if p not in xs:
        raise HypothesisError("A5 has elements of prime order 2, 3 and 5 only")
    F = alternating_group(5)
    x = F.element(xs[p])
    G = inner_semidirect(F, x, max_order)
    spec = f"semidirect:(alt:5)x(cyclic:{p}):action=conj:{xs[p]}"
    return _bilinear(f"nonsolvable:{p}", G, spec, p, f"({xs[p]},0)", "((),1)",
                     f"A5 ⋊ Z{p}, S = <x> x Z{p}")


def supersolvable(p: int, q: int, r: int, max_order: int = DEFAULT_MAX_ORDER) -> Instance:
    """``(Z_p ⋊ Z_q) x (Z_r ⋊ Z_q)`` with ``S`` the product of the two ``Z_q``."""
    if (p - 1) % q or (r - 1) % q:
        raise HypothesisError("q must divide p - 1 and r - 1")
    G1, G2 = metacyclic(p, q), metacyclic(r, q)
    G = direct_product(G1, G2, max_order)
    spec = f"product:(metacyclic:{p},{q})x(metacyclic:{r},{q})"
    return _bilinear(f"supersolvable:{p},{q},{r}", G, spec, q, "((0,1),(0,0))", "((0,0),(0,1))",
                     f"(Z{p} ⋊ Z{q}) x (Z{r} ⋊ Z{q})")


def generalized_dihedral_z3z3() -> Instance:
    N = direct_product(cyclic_group(3), cyclic_group(3))
    H = cyclic_group(2)
    action = [list(range(9)), [N.inv[n] for n in range(9)]]
    G = semidirect_product(N, H, action)
    spec = "semidirect:(product:(cyclic:3)x(cyclic:3))x(cyclic:2):action=(2,0),(0,2)"
    return _bilinear("gdih-z3z3", G, spec, 3, "((1,0),0)", "((0,1),0)",
                     "(Z3 x Z3) ⋊ Z2 by inversion, S = Z3 x Z3")


def d4xz2_klein() -> Instance:
    G = direct_product(dihedral_group(4), cyclic_group(2))
    return _bilinear("d4xz2-klein", G, "product:(dihedral:4)x(cyclic:2)", 2,
                     "(f,0)", "(e,1)", "D4 x Z2 with S = <f> x Z2")


def z4xz2_klein() -> Instance:
    G = direct_product(cyclic_group(4), cyclic_group(2))
    return _bilinear("z4xz2-klein", G, "product:(cyclic:4)x(cyclic:2)", 2,
                     "(2,0)", "(0,1)", "Z4 x Z2 with its Klein subgroup")


def d6_klein() -> Instance:
    G = dihedral_group(6)
    return _bilinear("d6-klein", G, "dihedral:6", 2, "r^3", "f", "D6 with S = {e, r^3, f, r^3f}")


def s3xs3(q: int) -> Instance:
    G = direct_product(symmetric_group(3), symmetric_group(3))
    if q == 3:
        return _bilinear("s3xs3-z3z3", G, "product:(sym:3)x(sym:3)", 3,
                         "((012),())", "((),(012))", "S3 x S3 with S = A3 x A3")
    return _bilinear("s3xs3-klein", G, "product:(sym:3)x(sym:3)", 2,
                     "((01),())", "((),(01))", "S3 x S3 with S = <(01)> x <(01)>")


def trivial_s(spec: str) -> Instance:
    from .specfile import parse_group_spec
    G = parse_group_spec(spec)
    return _trivial_s(f"trivial-s:{spec}", G, spec, f"{G.name} with S = 1")


def quaternion() -> FiniteGroup:
    """Q8 as a regular permutation group on 8 points."""
    i = perm_from_cycles("(0213)(4657)", 8)
    j = perm_from_cycles("(0415)(2736)", 8)
    return group_from_generators(8, [i, j], name="Q8")


QUATERNION_SPEC = "perm:8:(0213)(4657),(0415)(2736)"


# instances for the exhaustive suites; all orders <= 60
CATALOG: dict[str, Callable[[], Instance]] = {
    "klein-self": klein_self,
    "klein-dihedral": klein_dihedral,
    "klein-dihedral-alt": klein_dihedral_alt,
    "z4xz2-klein": z4xz2_klein,
    "z3z3-self": z3z3_self,
    "a4-klein": alternating_klein,
    "s4-even": lambda: symmetric(4, "even"),
    "s4-odd": lambda: symmetric(4, "odd"),
    "d6-klein": d6_klein,
    "d4xz2-klein": d4xz2_klein,
    "gdih-z3z3": generalized_dihedral_z3z3,
    "s3xs3-z3z3": lambda: s3xs3(3),
    "s3xs3-klein": lambda: s3xs3(2),
    "s3xd5": lambda: supersolvable(3, 2, 5),
    "trivial-s3": lambda: trivial_s("sym:3"),
    "trivial-z6": lambda: trivial_s("cyclic:6"),
    "trivial-q8": lambda: trivial_s(QUATERNION_SPEC),
}


def catalog(names: Optional[list[str]] = None) -> list[Instance]:
    names = list(CATALOG) if names is None else names
    out = []
    for n in names:
        inst = CATALOG[n]()
        inst.name = n
        out.append(inst)
    return out
