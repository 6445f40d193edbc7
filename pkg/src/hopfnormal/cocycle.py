"""Root-of-unity valued 2-cocycles on a subgroup ``S``.

A cocycle is stored as a table of exponents: entry ``(s, t)`` stands for
``alpha(s, t) = zeta_m ** table[s][t]``, indexed by the positions of
``s`` and ``t`` in ``S.elements``. The identity used throughout is

    alpha(r, s) alpha(rs, t) = alpha(s, t) alpha(r, st)

which is what associativity of ``x_s x_t = alpha(s, t) x_st`` requires.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional

import numpy as np

from .cyclotomic import lcm
from .errors import HypothesisError
from .groups import FiniteGroup, Subgroup, centralizer, conjugate_subgroup


@dataclass(frozen=True, eq=False)
class TwoCocycle:
    S: Subgroup
    modulus: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = self.S.order
        m = self.modulus
        if m < 1:
            raise HypothesisError("modulus must be positive")
        if len(self.table) != k or any(len(row) != k for row in self.table):
            raise HypothesisError(f"cocycle table must be {k}x{k}")
        object.__setattr__(self, "table",
                           tuple(tuple(int(e) % m for e in row) for row in self.table))
        object.__setattr__(self, "_pos", {s: i for i, s in enumerate(self.S.elements)})

    @classmethod
    def from_function(cls, S: Subgroup, modulus: int,
                      f: Callable[[int, int], int]) -> "TwoCocycle":
        els = S.elements
        return cls(S, modulus, tuple(tuple(f(s, t) for t in els) for s in els))

    @classmethod
    def trivial(cls, S: Subgroup, modulus: int = 1) -> "TwoCocycle":
        return cls.from_function(S, modulus, lambda s, t: 0)

    @property
    def G(self) -> FiniteGroup:
        return self.S.parent

    def pos(self, s: int) -> int:
        return self._pos[s]  # type: ignore[attr-defined]

    def __call__(self, s: int, t: int) -> int:
        """Exponent of ``alpha(s, t)`` for group elements ``s, t`` of ``S``."""
        p = self._pos  # type: ignore[attr-defined]
        return self.table[p[s]][p[t]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoCocycle):
            return NotImplemented
        return (self.S == other.S and self.modulus == other.modulus
                and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.S, self.modulus, self.table))

    @property
    def inverse_normalized(self) -> bool:
        inv = self.G.inv
        return all(self(s, inv[s]) == 0 for s in self.S.elements)

    def lift(self, m2: int) -> "TwoCocycle":
        if m2 % self.modulus:
            raise HypothesisError(f"{m2} is not a multiple of {self.modulus}")
        k = m2 // self.modulus
        return TwoCocycle(self.S, m2, tuple(tuple(e * k for e in row) for row in self.table))

    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64).reshape(self.S.order, self.S.order)

    def position_table(self) -> np.ndarray:
        """``P[i, j] = position of S[i] * S[j]`` in ``S.elements``."""
        els = self.S.elements
        mul = self.G.mul
        p = self._pos  # type: ignore[attr-defined]
        return np.asarray([[p[mul[s][t]] for t in els] for s in els], dtype=np.int64)

    def format(self) -> list[str]:
        """Lines ``s t e`` in canonical label order."""
        lab = self.G.labels
        els = self.S.elements
        return [f"{lab[s]} {lab[t]} {self.table[i][j]}"
                for i, s in enumerate(els) for j, t in enumerate(els)]


@dataclass(frozen=True)
class OneCochain:
    """Map ``phi: S -> mu_m`` stored as exponents, with ``phi(1) = 1``."""

    S: Subgroup
    modulus: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.S.order:
            raise HypothesisError("one exponent per element of S is required")
        vals = tuple(int(v) % self.modulus for v in self.values)
        if vals[0] != 0:
            raise HypothesisError("a 1-cochain must be 1 at the identity")
        object.__setattr__(self, "values", vals)

    @classmethod
    def trivial(cls, S: Subgroup, modulus: int = 1) -> "OneCochain":
        return cls(S, modulus, (0,) * S.order)

    def __call__(self, s: int) -> int:
        return self.values[self.S.elements.index(s)]

    def lift(self, m2: int) -> "OneCochain":
        if m2 % self.modulus:
            raise HypothesisError(f"{m2} is not a multiple of {self.modulus}")
        k = m2 // self.modulus
        return OneCochain(self.S, m2, tuple(v * k for v in self.values))


# ---------------------------------------------------------------------------
# validation


def cocycle_violations(alpha: TwoCocycle, limit: Optional[int] = 20) -> list[tuple[int, ...]]:
    """Violations of normalization (pairs) and of the cocycle identity (triples).

    A pair ``(s, t)`` means ``alpha(s, t) != 1`` with ``s`` or ``t`` the
    identity; a triple ``(r, s, t)`` means the identity fails there. Entries
    are group element indices, in canonical order.
    """
    els = alpha.S.elements
    m = alpha.modulus
    A = alpha.array()
    out: list[tuple[int, ...]] = []
    for j, s in enumerate(els):
        if A[0, j] % m:
            out.append((0, s))
        if j and A[j, 0] % m:
            out.append((s, 0))
    P = alpha.position_table()
    diff = (A[:, :, None] + A[P, :] - A[None, :, :] - A[:, P]) % m
    for r, s, t in zip(*np.nonzero(diff)):
        out.append((els[r], els[s], els[t]))
        if limit is not None and len(out) >= limit:
            break
    return out


def validate(alpha: TwoCocycle) -> bool:
    """True iff ``alpha`` is a normalized 2-cocycle."""
    return not cocycle_violations(alpha, limit=1)


def multiply_by_coboundary(alpha: TwoCocycle, phi: OneCochain) -> TwoCocycle:
    """``beta(x, y) = alpha(x, y) phi(x) phi(y) / phi(xy)``, lifting to a common modulus."""
    if phi.S != alpha.S:
        raise HypothesisError("cochain and cocycle live on different subgroups")
    m = lcm(alpha.modulus, phi.modulus)
    a = alpha.lift(m)
    f = phi.lift(m).values
    P = alpha.position_table()
    k = alpha.S.order
    table = tuple(tuple(a.table[i][j] + f[i] + f[j] - f[P[i, j]] for j in range(k))
                  for i in range(k))
    return TwoCocycle(alpha.S, m, table)


def normalize_inverse_pairs(alpha: TwoCocycle) -> tuple[TwoCocycle, OneCochain]:
    """Return ``(beta, phi)`` with ``beta = alpha * d(phi)`` and ``beta(s, s^-1) = 1``.

    For a pair ``s != s^-1`` (``s`` the smaller index) take ``phi(s) = 1`` and
    ``phi(s^-1) = alpha(s, s^-1)^-1``. For an involution ``phi(s)`` must square
    to ``alpha(s, s)^-1``; when some involution has no such root in ``mu_m``
    the modulus is doubled first.
    """
    S = alpha.S
    G = alpha.G
    inv = G.inv
    m = alpha.modulus
    invols = [s for s in S.elements if s != 0 and inv[s] == s]
    if m % 2 == 0 and any((-alpha(s, s)) % 2 for s in invols):
        alpha = alpha.lift(2 * m)
        m *= 2
    values = {0: 0}
    for s in S.elements:
        if s == 0 or s in values:
            continue
        si = inv[s]
        if si == s:
            target = (-alpha(s, s)) % m
            values[s] = _half(target, m)
        else:
            values[s] = 0
            values[si] = (-alpha(s, si)) % m
    phi = OneCochain(S, m, tuple(values[s] for s in S.elements))
    beta = multiply_by_coboundary(alpha, phi)
    return beta, phi


def _half(a: int, m: int) -> int:
    """Least ``e`` in ``0..m-1`` with ``2e = a (mod m)``."""
    for e in range(m):
        if (2 * e - a) % m == 0:
            return e
    raise ArithmeticError(f"{a} has no half modulo {m}")


# ---------------------------------------------------------------------------
# regularity


def _symmetric_on(alpha: TwoCocycle, s: int, ts) -> bool:
    return all(alpha(s, t) == alpha(t, s) for t in ts)


def alpha_regular_elements(alpha: TwoCocycle) -> list[int]:
    """``{s in S : alpha(s, t) = alpha(t, s) for all t in C_S(s)}``."""
    G, S = alpha.G, alpha.S
    return [s for s in S.elements
            if _symmetric_on(alpha, s, centralizer(G, s, S).elements)]


def is_nondegenerate(alpha: TwoCocycle) -> bool:
    return alpha_regular_elements(alpha) == [0]


def alpha_F_regular(alpha: TwoCocycle, F: Subgroup, g: int, s: int) -> bool:
    """Is the class ``(g, s)`` regular: symmetry on ``C_S(s) ∩ g^-1 F g``?"""
    G = alpha.G
    mul, inv = G.mul, G.inv
    fm = F.membership
    for t in alpha.S.elements:
        if mul[t][s] != mul[s][t]:
            continue
        if not fm[mul[mul[g][t]][inv[g]]]:
            continue
        if alpha(s, t) != alpha(t, s):
            return False
    return True


def twisted_conjugation(alpha: TwoCocycle, s: int, t: int) -> tuple[int, int]:
    """``x_s x_t x_{s^-1} = zeta^c x_{s t s^-1}``; returns ``(c, s t s^-1)``."""
    if not alpha.inverse_normalized:
        raise HypothesisError("twisted conjugation needs alpha(s, s^-1) = 1")
    G = alpha.G
    st = G.mul[s][t]
    si = G.inv[s]
    c = (alpha(s, t) + alpha(st, si)) % alpha.modulus
    return c, G.mul[st][si]


def conjugate_pair(g: int, S: Subgroup, alpha: TwoCocycle) -> tuple[Subgroup, TwoCocycle]:
    """``(g S g^-1, alpha^g)`` with ``alpha^g(g s g^-1, g t g^-1) = alpha(s, t)``."""
    if S != alpha.S:
        raise HypothesisError("alpha is not defined on S")
    G = alpha.G
    S2 = conjugate_subgroup(G, g, S)
    gi = G.inv[g]
    beta = TwoCocycle.from_function(S2, alpha.modulus,
                                    lambda u, v: alpha(G.conj(gi, u), G.conj(gi, v)))
    return S2, beta


# ---------------------------------------------------------------------------
# builders


def iso_from_generators(S: Subgroup, a: int, b: int, q: int) -> dict[int, tuple[int, int]]:
    """Label ``a^i b^j`` by ``(i, j)``; verified by :func:`standard_nondegenerate`."""
    G = S.parent
    iso: dict[int, tuple[int, int]] = {}
    for i in range(q):
        for j in range(q):
            x = G.mul[G.power(a, i)][G.power(b, j)]
            if x in iso:
                raise HypothesisError("generators do not give Z_q x Z_q")
            iso[x] = (i, j)
    return iso


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def standard_nondegenerate(q: int, S: Subgroup,
                           iso: Mapping[int, tuple[int, int]]) -> TwoCocycle:
    """Bilinear ``alpha((a1,b1),(a2,b2)) = zeta_q^(b1 a2)``, inverse-normalized."""
    if not _is_prime(q):
        raise HypothesisError(f"{q} is not prime")
    G = S.parent
    if S.order != q * q or set(iso) != set(S.elements):
        raise HypothesisError(f"S must be elementary abelian of order {q * q}")
    if len(set(iso.values())) != q * q or any(
            not (0 <= a < q and 0 <= b < q) for a, b in iso.values()):
        raise HypothesisError("iso must be a bijection onto Z_q x Z_q")
    for x in S.elements:
        for y in S.elements:
            (a1, b1), (a2, b2) = iso[x], iso[y]
            if iso[G.mul[x][y]] != ((a1 + a2) % q, (b1 + b2) % q):
                raise HypothesisError("iso does not respect multiplication")
    alpha = TwoCocycle.from_function(S, q, lambda x, y: iso[x][1] * iso[y][0])
    beta, _ = normalize_inverse_pairs(alpha)
    return beta


def bilinear_cocycle(q: int, S: Subgroup, a: int, b: int) -> TwoCocycle:
    """The standard non-degenerate cocycle for ``S = <a> x <b> ≅ Z_q x Z_q``."""
    return standard_nondegenerate(q, S, iso_from_generators(S, a, b, q))


def order_is_square(n: int) -> bool:
    r = int(round(n ** 0.5))
    return r * r == n

