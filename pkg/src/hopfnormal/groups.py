"""Finite groups given by dense multiplication tables.

Elements are the integers ``0..n-1`` and ``0`` is always the identity.
Every group keeps both a numpy table (for vectorised bulk work) and a
list-of-lists copy (scalar lookups in Python loops are much faster on
lists).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import HypothesisError, SizeLimitError, SpecParseError

DEFAULT_MAX_ORDER = 2000
DEFAULT_MAX_LATTICE = 10000

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# permutations


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p * q``, i.e. apply ``q`` first."""
    return tuple(p[i] for i in q)


def perm_from_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation such as ``(01)(23)``, ``(0 1 2)`` or ``(0,10)``.

    Cycles are composed right to left. Points are 0-based. A cycle body
    without separators is read one digit per point.
    """
    text = text.strip()
    img = list(range(degree))
    if text in ("", "()", "e", "1"):
        return tuple(img)
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise SpecParseError(f"bad cycle notation {text!r}")
        end = text.find(")", pos)
        if end < 0:
            raise SpecParseError(f"unbalanced cycle notation {text!r}")
        body = text[pos + 1:end].strip()
        if "," in body or " " in body:
            parts = [p for p in body.replace(",", " ").split()]
        else:
            parts = list(body)
        try:
            pts = [int(p) for p in parts]
        except ValueError:
            raise SpecParseError(f"bad point in cycle {body!r}") from None
        if any(p < 0 or p >= degree for p in pts) or len(set(pts)) != len(pts):
            raise SpecParseError(f"cycle {body!r} invalid for degree {degree}")
        cycles.append(pts)
        pos = end + 1
    perm: Perm = tuple(img)
    for pts in cycles:
        c = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            c[a] = b
        perm = compose(perm, tuple(c))
    return perm


def perm_to_cycles(p: Perm) -> str:
    degree = len(p)
    seen = [False] * degree
    out = []
    sep = "" if degree <= 10 else ","
    for i in range(degree):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j))
            j = p[j]
        out.append("(" + sep.join(cyc) + ")")
    return "".join(out) or "()"


# ---------------------------------------------------------------------------
# core types


@dataclass(eq=False)
class FiniteGroup:
    """A finite group with elements ``0..order-1`` and identity ``0``.

    ``gens`` always generates the group. ``perms`` is set for permutation
    groups and ``factors`` for direct and semidirect products; both are used
    only to parse element labels.
    """

    table: np.ndarray
    labels: tuple[str, ...]
    gens: tuple[int, ...]
    name: str = "G"
    perms: Optional[tuple[Perm, ...]] = None
    factors: Optional[tuple["FiniteGroup", "FiniteGroup"]] = None
    mul: list[list[int]] = field(init=False, repr=False)
    inv: list[int] = field(init=False, repr=False)
    identity: int = field(init=False, default=0)

    def __post_init__(self) -> None:
        t = np.asarray(self.table, dtype=np.int64)
        n = t.shape[0]
        if t.shape != (n, n) or n == 0:
            raise HypothesisError("multiplication table must be square and nonempty")
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise HypothesisError("element 0 must be the identity")
        srt = np.sort(t, axis=1)
        if not (srt == ar).all() or not (np.sort(t, axis=0) == ar[:, None]).all():
            raise HypothesisError("multiplication table is not a Latin square")
        t.setflags(write=False)
        self.table = t
        self.mul = t.tolist()
        inv = np.argmin(t, axis=1)  # position of the 0 entry in each row
        self.inv = inv.tolist()
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._label_index) != n:
            raise HypothesisError("element labels must be distinct")
        self._perm_index = None
        if self.perms is not None:
            self._perm_index = {p: i for i, p in enumerate(self.perms)}

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def power(self, x: int, k: int) -> int:
        y = 0
        if k < 0:
            x, k = self.inv[x], -k
        for _ in range(k):
            y = self.mul[y][x]
        return y

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def label(self, x: int) -> str:
        return self.labels[x]

    def element(self, text: str) -> int:
        """Resolve an element label (or ``#index``) to its index."""
        text = text.strip()
        if text in self._label_index:
            return self._label_index[text]
        if text.startswith("#"):
            try:
                k = int(text[1:])
            except ValueError:
                raise SpecParseError(f"bad element index {text!r}") from None
            if 0 <= k < self.order:
                return k
            raise SpecParseError(f"element index {k} out of range")
        if self._perm_index is not None:
            p = perm_from_cycles(text, len(self.perms[0]))
            if p in self._perm_index:
                return self._perm_index[p]
            raise SpecParseError(f"permutation {text!r} is not in {self.name}")
        if self.factors is not None and text.startswith("(") and text.endswith(")"):
            parts = split_top_level(text[1:-1], ",")
            if len(parts) == 2:
                a = self.factors[0].element(parts[0])
                b = self.factors[1].element(parts[1])
                return a * self.factors[1].order + b
        raise SpecParseError(f"unknown element {text!r} in {self.name}")

    def check_axioms(self) -> bool:
        """Exhaustive check of associativity, identity and inverses."""
        t = self.table
        n = self.order
        ar = np.arange(n)
        if not (t[ar, np.asarray(self.inv)] == 0).all():
            return False
        for a in range(n):
            # (a*b)*c vs a*(b*c) for all b, c
            left = t[t[a]]
            right = t[a][t]
            if not np.array_equal(left, right):
                return False
        return True


def split_top_level(text: str, sep: str) -> list[str]:
    """Split ``text`` on ``sep`` occurrences outside any brackets."""
    depth = 0
    out, cur = [], []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


class Subgroup:
    """A subgroup of ``parent``, stored as a sorted tuple of element indices."""

    __slots__ = ("parent", "elements", "membership", "_gens")

    def __init__(self, parent: FiniteGroup, elements: Iterable[int]):
        self.parent = parent
        self.elements: tuple[int, ...] = tuple(sorted(set(elements)))
        member = [False] * parent.order
        for x in self.elements:
            member[x] = True
        self.membership = member
        self._gens: Optional[tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return self.membership[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"

    def issubset(self, other: "Subgroup") -> bool:
        return all(other.membership[x] for x in self.elements)

    def index(self) -> int:
        return self.parent.order // self.order

    def is_valid(self) -> bool:
        mul, inv, m = self.parent.mul, self.parent.inv, self.membership
        if not m[0] or self.parent.order % self.order:
            return False
        return all(m[inv[a]] and all(m[mul[a][b]] for b in self.elements)
                   for a in self.elements)

    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily in index order."""
        if self._gens is None:
            gens: list[int] = []
            cur = [False] * self.parent.order
            cur[0] = True
            size = 1
            for x in self.elements:
                if not cur[x]:
                    gens.append(x)
                    elems = _closure(self.parent, gens)
                    cur = [False] * self.parent.order
                    for y in elems:
                        cur[y] = True
                    size = len(elems)
                    if size == self.order:
                        break
            self._gens = tuple(gens)
        return self._gens

    def labels(self) -> list[str]:
        return [self.parent.labels[x] for x in self.elements]


@dataclass(frozen=True)
class CosetDecomposition:
    """Left cosets ``g_i S``; ``rep_of[g] = (i, t)`` with ``g = reps[i] * t``."""

    subgroup: Subgroup
    reps: tuple[int, ...]
    rep_of: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.reps)


# ---------------------------------------------------------------------------
# constructors


def _reindex_perm_bfs(degree: int, gens: Sequence[Perm], max_order: int):
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    right = [[0] * len(gens)]  # right[x][k] = index of elems[x] * gens[k]
    parent = [(-1, -1)]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        px = elems[x]
        for k, g in enumerate(gens):
            y = compose(px, g)
            j = index.get(y)
            if j is None:
                if len(elems) >= max_order:
                    raise SizeLimitError(
                        f"group generated exceeds the order cap {max_order}")
                j = len(elems)
                index[y] = j
                elems.append(y)
                right.append([0] * len(gens))
                parent.append((x, k))
                queue.append(j)
            right[x][k] = j
    return elems, index, right, parent


def group_from_generators(degree: int, gens: Sequence[Sequence[int]],
                          max_order: int = DEFAULT_MAX_ORDER,
                          name: str = "G") -> FiniteGroup:
    """Close a list of permutations of ``{0..degree-1}`` under composition.

    Elements are numbered breadth-first from the identity, multiplying on
    the right by the generators in the given order.
    """
    perms = []
    for g in gens:
        g = tuple(int(x) for x in g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise HypothesisError(f"{g} is not a permutation of degree {degree}")
        perms.append(g)
    elems, index, right, parent = _reindex_perm_bfs(degree, perms, max_order)
    n = len(elems)
    table = np.zeros((n, n), dtype=np.int64)
    table[:, 0] = np.arange(n)
    rt = np.asarray(right, dtype=np.int64).reshape(n, len(perms))
    # column y = column parent(y) pushed through right multiplication by gen
    for y in range(1, n):
        p, k = parent[y]
        table[:, y] = rt[table[:, p], k]
    gen_idx = tuple(dict.fromkeys(index[g] for g in perms if index[g] != 0))
    labels = tuple(perm_to_cycles(p) for p in elems)
    return FiniteGroup(table, labels, gen_idx, name=name, perms=tuple(elems))


def from_table(table, labels: Optional[Sequence[str]] = None,
               name: str = "G", gens: Optional[Sequence[int]] = None) -> FiniteGroup:
    """Build a group from a Cayley table, moving the identity to index 0."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
    if not ids:
        raise HypothesisError("table has no identity element")
    e = ids[0]
    if labels is None:
        labels = [str(i) for i in range(n)]
    if e != 0:
        order = [e] + [i for i in range(n) if i != e]
        pos = np.empty(n, dtype=np.int64)
        pos[order] = ar
        t = pos[t[np.ix_(order, order)]]
        labels = [labels[i] for i in order]
        if gens is not None:
            gens = [int(pos[g]) for g in gens]
    if gens is None:
        gens = _greedy_generators(t)
    return FiniteGroup(t, tuple(labels), tuple(gens), name=name)


def _greedy_generators(t: np.ndarray) -> list[int]:
    n = t.shape[0]
    mul = t.tolist()
    gens: list[int] = []
    have = {0}
    for x in range(n):
        if x not in have:
            gens.append(x)
            have = set(_closure_tables(mul, gens))
            if len(have) == n:
                break
    return gens


def cyclic_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    _cap(n, max_order)
    ar = np.arange(n)
    table = (ar[:, None] + ar[None, :]) % n
    gens = (1,) if n > 1 else ()
    return FiniteGroup(table, tuple(str(i) for i in range(n)), gens, name=f"Z{n}")


def dihedral_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Dihedral group of order ``2n``; ``r^a f^b`` has index ``a + n*b``."""
    _cap(2 * n, max_order)
    if n < 1:
        raise HypothesisError("dihedral:n needs n >= 1")
    size = 2 * n
    table = np.zeros((size, size), dtype=np.int64)
    for x in range(size):
        a, b = x % n, x // n
        for y in range(size):
            c, d = y % n, y // n
            e = (a + (c if b == 0 else -c)) % n
            table[x, y] = e + n * ((b + d) % 2)

    def lab(x: int) -> str:
        a, b = x % n, x // n
        r = "" if a == 0 else ("r" if a == 1 else f"r^{a}")
        s = r + ("f" if b else "")
        return s or "e"

    gens = tuple(g for g in ((1 % n), n) if g != 0)
    return FiniteGroup(table, tuple(lab(x) for x in range(size)), gens, name=f"D{n}")


def symmetric_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n <= 1:
        return group_from_generators(max(n, 1), [], max_order, name=f"S{n}")
    gens = [perm_from_cycles("(0,1)", n)]
    if n > 2:
        gens.append(perm_from_cycles("(" + ",".join(map(str, range(n))) + ")", n))
    return group_from_generators(n, gens, max_order, name=f"S{n}")


def alternating_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    gens = [perm_from_cycles(f"(0,1,{k})", n) for k in range(2, n)]
    return group_from_generators(max(n, 1), gens, max_order, name=f"A{n}")


def direct_product(G1: FiniteGroup, G2: FiniteGroup,
                   max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Componentwise product; the pair ``(a, b)`` has index ``a*|G2| + b``."""
    n1, n2 = G1.order, G2.order
    _cap(n1 * n2, max_order)
    a = np.arange(n1 * n2)
    x1, x2 = a // n2, a % n2
    table = G1.table[x1[:, None], x1[None, :]] * n2 + G2.table[x2[:, None], x2[None, :]]
    labels = tuple(f"({G1.labels[i]},{G2.labels[j]})" for i in range(n1) for j in range(n2))
    gens = tuple(g * n2 for g in G1.gens) + tuple(G2.gens)
    return FiniteGroup(table, labels, gens, name=f"{G1.name}x{G2.name}",
                       factors=(G1, G2))


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action,
                       max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """``N ⋊ H`` with ``(n1,h1)(n2,h2) = (n1 * action[h1][n2], h1 h2)``.

    ``action`` is an ``|H| x |N|`` table. Both the automorphism property of
    each row and the homomorphism property ``H -> Aut(N)`` are verified.
    """
    nN, nH = N.order, H.order
    _cap(nN * nH, max_order)
    act = np.asarray(action, dtype=np.int64)
    if act.shape != (nH, nN):
        raise HypothesisError(f"action table must have shape ({nH}, {nN})")
    ar = np.arange(nN)
    for h in range(nH):
        row = act[h]
        if not np.array_equal(np.sort(row), ar):
            raise HypothesisError(f"action of {H.labels[h]} is not a bijection")
        if not np.array_equal(row[N.table], N.table[row[:, None], row[None, :]]):
            raise HypothesisError(f"action of {H.labels[h]} is not an automorphism")
    if not np.array_equal(act[0], ar):
        raise HypothesisError("identity of H must act trivially")
    for h1 in range(nH):
        for h2 in range(nH):
            if not np.array_equal(act[H.mul[h1][h2]], act[h1][act[h2]]):
                raise HypothesisError("action is not a homomorphism H -> Aut(N)")
    a = np.arange(nN * nH)
    xn, xh = a // nH, a % nH
    twisted = act[xh[:, None], xn[None, :]]
    table = N.table[xn[:, None], twisted] * nH + H.table[xh[:, None], xh[None, :]]
    labels = tuple(f"({N.labels[i]},{H.labels[j]})" for i in range(nN) for j in range(nH))
    gens = tuple(g * nH for g in N.gens) + tuple(H.gens)
    return FiniteGroup(table, labels, gens, name=f"{N.name}:{H.name}", factors=(N, H))


def extend_homomorphism(src: FiniteGroup, dst: FiniteGroup,
                        images: Sequence[int]) -> list[int]:
    """Extend generator images ``src.gens -> images`` to a full map; verify it."""
    if len(images) != len(src.gens):
        raise HypothesisError("need one image per generator")
    phi = [-1] * src.order
    phi[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, im in zip(src.gens, images):
            y = src.mul[x][g]
            if phi[y] < 0:
                phi[y] = dst.mul[phi[x]][im]
                queue.append(y)
    p = np.asarray(phi)
    if (p < 0).any() or not np.array_equal(p[src.table], dst.table[p[:, None], p[None, :]]):
        raise HypothesisError("generator images do not define a homomorphism")
    return phi


def _cap(n: int, max_order: int) -> None:
    if n > max_order:
        raise SizeLimitError(f"group order {n} exceeds the order cap {max_order}")


# ---------------------------------------------------------------------------
# subgroups


def _closure_tables(mul: list[list[int]], gens: Iterable[int]) -> list[int]:
    gens = [g for g in gens if g != 0]
    seen = {0}
    out = [0]
    i = 0
    while i < len(out):
        x = out[i]
        i += 1
        row = mul[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def _closure(G: FiniteGroup, gens: Iterable[int]) -> list[int]:
    return _closure_tables(G.mul, gens)


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.order:
            raise HypothesisError(f"{g} is not an element of {G.name}")
    return Subgroup(G, _closure(G, gens))


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.order))


def trivial(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, [0])


def centralizer(G: FiniteGroup, s: int, within: Optional[Subgroup] = None) -> Subgroup:
    """``{t in within : ts = st}``; ``within`` defaults to ``G``."""
    mul = G.mul
    pool = within.elements if within is not None else range(G.order)
    return Subgroup(G, [t for t in pool if mul[t][s] == mul[s][t]])


def center(G: FiniteGroup) -> Subgroup:
    t = G.table
    return Subgroup(G, [int(z) for z in np.nonzero((t == t.T).all(axis=1))[0]])


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Conjugacy classes, each sorted, listed by smallest member."""
    n = G.order
    inv = np.asarray(G.inv)
    seen = np.zeros(n, dtype=bool)
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        cls = np.unique(G.table[G.table[:, x], inv])
        seen[cls] = True
        classes.append(tuple(int(c) for c in cls))
    return classes


def conjugate_subgroup(G: FiniteGroup, g: int, H: Subgroup) -> Subgroup:
    """``g H g^-1``."""
    return Subgroup(G, [G.conj(g, h) for h in H.elements])


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    m = H.membership
    return all(m[G.conj(g, h)] for g in G.gens for h in H.elements)


def _sort_key(H: Subgroup):
    return (H.order, H.elements)


def normal_subgroups(G: FiniteGroup,
                     max_lattice: int = DEFAULT_MAX_LATTICE) -> list[Subgroup]:
    """All normal subgroups, sorted by order then by element tuple.

    Every normal subgroup is the join of the normal closures of the classes
    it contains, so closing the set of class closures under pairwise products
    gives the whole lattice.
    """
    mul = G.mul
    found: dict[tuple[int, ...], Subgroup] = {}
    for cls in conjugacy_classes(G):
        N = Subgroup(G, _closure(G, cls))
        found.setdefault(N.elements, N)
    frontier = list(found.values())
    atoms = list(found.values())
    while frontier:
        new = []
        for A in frontier:
            for B in atoms:
                if B.issubset(A):
                    continue
                prod = {mul[a][b] for a in A.elements for b in B.elements}
                key = tuple(sorted(prod))
                if key not in found:
                    if len(found) >= max_lattice:
                        raise SizeLimitError(
                            f"normal subgroup lattice exceeds {max_lattice} entries")
                    N = Subgroup(G, key)
                    found[key] = N
                    new.append(N)
        frontier = new
    return sorted(found.values(), key=_sort_key)


def all_subgroups(G: FiniteGroup, max_lattice: int = DEFAULT_MAX_LATTICE) -> list[Subgroup]:
    """Every subgroup, by iterated joins with cyclic subgroups."""
    cyclic: dict[tuple[int, ...], Subgroup] = {}
    for x in range(G.order):
        C = subgroup_generated(G, [x])
        cyclic.setdefault(C.elements, C)
    found = dict(cyclic)
    frontier = list(found.values())
    cyc = list(cyclic.values())
    while frontier:
        new = []
        for A in frontier:
            for C in cyc:
                if C.issubset(A):
                    continue
                J = subgroup_generated(G, A.generators() + C.generators())
                if J.elements not in found:
                    if len(found) >= max_lattice:
                        raise SizeLimitError(f"subgroup lattice exceeds {max_lattice} entries")
                    found[J.elements] = J
                    new.append(J)
        frontier = new
    return sorted(found.values(), key=_sort_key)


def left_coset_decomposition(G: FiniteGroup, S: Subgroup) -> CosetDecomposition:
    """Left cosets ``gS``; each representative is the least index in its coset."""
    mul = G.mul
    rep_of: list[Optional[tuple[int, int]]] = [None] * G.order
    reps = []
    for g in range(G.order):
        if rep_of[g] is not None:
            continue
        i = len(reps)
        reps.append(g)
        for t in S.elements:
            rep_of[mul[g][t]] = (i, t)
    return CosetDecomposition(S, tuple(reps), tuple(rep_of))  # type: ignore[arg-type]
