"""Text formats: the group-spec grammar and instance files.

Group specs::

    cyclic:n   dihedral:n   sym:n   alt:n   metacyclic:p,q
    perm:degree:gen1,gen2,...          (cycle notation, 0-based points)
    product:(spec)x(spec)
    semidirect:(specN)x(specH):action=<auto>;<auto>;...

In ``semidirect`` each ``<auto>`` lists the images of N's generators under
one generator of H (comma separated element labels), or is ``conj:<label>``
for conjugation by an element of N.

Instance files are made of named sections::

    [group]
    sym:5
    [S]
    (01)
    (23)
    [cocycle]
    builtin=bilinear:2
    a=(01)
    b=(23)
    [F]
    (012)
    (01234)
    [options]
    max_order=2000

The cocycle section is either ``builtin=trivial``, ``builtin=bilinear:q``
with ``a=`` and ``b=`` generators, or ``modulus=m`` followed by one
``s t e`` line per pair of elements of S.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .cocycle import (TwoCocycle, bilinear_cocycle, cocycle_violations,
                      is_nondegenerate, normalize_inverse_pairs)
from .errors import HypothesisError, SpecParseError
from .groups import (DEFAULT_MAX_ORDER, FiniteGroup, Subgroup, alternating_group,
                     cyclic_group, dihedral_group, direct_product, extend_homomorphism,
                     group_from_generators, perm_from_cycles, semidirect_product,
                     split_top_level, subgroup_generated, symmetric_group)

SECTIONS = ("group", "S", "cocycle", "F", "options")


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecParseError(f"expected an integer for {what}, got {text!r}") from None


def _split_pair(body: str) -> tuple[str, str, str]:
    """Split ``(A)x(B)rest`` into ``A``, ``B`` and ``rest``."""
    parts = []
    pos = 0
    for _ in range(2):
        if pos >= len(body) or body[pos] != "(":
            raise SpecParseError(f"expected '(' in {body!r}")
        depth = 0
        for k in range(pos, len(body)):
            depth += body[k] == "("
            depth -= body[k] == ")"
            if depth == 0:
                break
        else:
            raise SpecParseError(f"unbalanced parentheses in {body!r}")
        parts.append(body[pos + 1:k])
        pos = k + 1
        if len(parts) == 1:
            if body[pos:pos + 1] != "x":
                raise SpecParseError(f"expected 'x' between factors in {body!r}")
            pos += 1
    return parts[0], parts[1], body[pos:]


def parse_group_spec(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    from .instances import metacyclic  # circular at import time

    spec = spec.strip()
    kind, _, body = spec.partition(":")
    if kind == "cyclic":
        G = cyclic_group(_int(body, "cyclic"), max_order)
    elif kind == "dihedral":
        G = dihedral_group(_int(body, "dihedral"), max_order)
    elif kind == "sym":
        G = symmetric_group(_int(body, "sym"), max_order)
    elif kind == "alt":
        G = alternating_group(_int(body, "alt"), max_order)
    elif kind == "metacyclic":
        p, _, q = body.partition(",")
        G = metacyclic(_int(p, "metacyclic"), _int(q, "metacyclic"), max_order)
    elif kind == "perm":
        deg, _, gens = body.partition(":")
        degree = _int(deg, "perm degree")
        perms = [perm_from_cycles(g, degree) for g in split_top_level(gens, ",") if g.strip()]
        G = group_from_generators(degree, perms, max_order)
    elif kind == "product":
        a, b, rest = _split_pair(body)
        if rest:
            raise SpecParseError(f"trailing text {rest!r} in product spec")
        G = direct_product(parse_group_spec(a, max_order), parse_group_spec(b, max_order),
                           max_order)
    elif kind == "semidirect":
        a, b, rest = _split_pair(body)
        if not rest.startswith(":action="):
            raise SpecParseError("semidirect spec needs ':action=...'")
        N = parse_group_spec(a, max_order)
        H = parse_group_spec(b, max_order)
        G = semidirect_product(N, H, _action_table(N, H, rest[len(":action="):]), max_order)
    else:
        raise SpecParseError(f"unknown group kind {kind!r}")
    G.name = spec
    return G


def _action_table(N: FiniteGroup, H: FiniteGroup, text: str) -> list[list[int]]:
    autos_txt = [t for t in split_top_level(text, ";") if t.strip()]
    if len(autos_txt) != len(H.gens):
        raise SpecParseError(
            f"need {len(H.gens)} automorphisms (one per generator of H), got {len(autos_txt)}")
    autos = []
    for t in autos_txt:
        t = t.strip()
        if t.startswith("conj:"):
            x = N.element(t[5:])
            images = [N.conj(x, g) for g in N.gens]
        else:
            images = [N.element(lab) for lab in split_top_level(t, ",")]
        phi = extend_homomorphism(N, N, images)
        if len(set(phi)) != N.order:
            raise HypothesisError("action generator images are not an automorphism")
        autos.append(phi)
    table: list[Optional[list[int]]] = [None] * H.order
    table[0] = list(range(N.order))
    queue = deque([0])
    while queue:
        h = queue.popleft()
        for g, phi in zip(H.gens, autos):
            y = H.mul[h][g]
            if table[y] is None:
                cur = table[h]
                table[y] = [cur[phi[n]] for n in range(N.order)]
                queue.append(y)
    return table  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# instance files


@dataclass
class InstanceSpec:
    group: str
    s_generators: list[str]
    cocycle: list[str]
    f_generators: Optional[list[str]] = None
    options: dict[str, str] = field(default_factory=dict)

    def render(self) -> str:
        out = ["[group]", self.group, "[S]", *self.s_generators, "[cocycle]", *self.cocycle]
        if self.f_generators is not None:
            out += ["[F]", *self.f_generators]
        if self.options:
            out += ["[options]", *(f"{k}={v}" for k, v in sorted(self.options.items()))]
        return "\n".join(out) + "\n"


def parse_instance(text: str) -> InstanceSpec:
    sections: dict[str, list[str]] = {}
    current = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip() if not raw.lstrip().startswith("#") else ""
        if not line:
            continue
        if line.startswith("[") and line.endswith("]") and line[1:-1] in SECTIONS:
            current = line[1:-1]
            if current in sections:
                raise SpecParseError(f"duplicate section [{current}]")
            sections[current] = []
            continue
        if current is None:
            raise SpecParseError(f"text before the first section: {line!r}")
        sections[current].append(line)
    for req in ("group", "S", "cocycle"):
        if req not in sections:
            raise SpecParseError(f"missing section [{req}]")
    if len(sections["group"]) != 1:
        raise SpecParseError("[group] must contain exactly one spec line")
    opts = {}
    for line in sections.get("options", []):
        k, sep, v = line.partition("=")
        if not sep:
            raise SpecParseError(f"bad option line {line!r}")
        opts[k.strip()] = v.strip()
    return InstanceSpec(sections["group"][0], sections["S"], sections["cocycle"],
                        sections.get("F"), opts)


@dataclass
class LoadedInstance:
    G: FiniteGroup
    S: Subgroup
    alpha: TwoCocycle
    F: Optional[Subgroup]
    normalized: bool  # True if the input cocycle had to be inverse-normalized


def parse_cocycle(G: FiniteGroup, S: Subgroup, lines: list[str]) -> TwoCocycle:
    kv = {}
    rows = []
    for line in lines:
        if "=" in line and len(line.split()) == 1:
            k, _, v = line.partition("=")
            kv[k.strip()] = v.strip()
        else:
            rows.append(line.split())
    builtin = kv.get("builtin")
    if builtin == "trivial":
        return TwoCocycle.trivial(S)
    if builtin is not None:
        kind, _, q = builtin.partition(":")
        if kind != "bilinear":
            raise SpecParseError(f"unknown builtin cocycle {builtin!r}")
        if "a" not in kv or "b" not in kv:
            raise SpecParseError("bilinear cocycle needs a= and b= generators")
        a, b = G.element(kv["a"]), G.element(kv["b"])
        if subgroup_generated(G, [a, b]) != S:
            raise HypothesisError("a and b do not generate S")
        return bilinear_cocycle(_int(q, "bilinear q"), S, a, b)
    if "modulus" not in kv:
        raise SpecParseError("cocycle section needs modulus= or builtin=")
    m = _int(kv["modulus"], "modulus")
    k = S.order
    table: list[list[Optional[int]]] = [[None] * k for _ in range(k)]
    pos = {s: i for i, s in enumerate(S.elements)}
    for row in rows:
        if len(row) != 3:
            raise SpecParseError(f"cocycle line must be 's t e': {' '.join(row)!r}")
        s, t = G.element(row[0]), G.element(row[1])
        if s not in pos or t not in pos:
            raise HypothesisError(f"cocycle entry outside S: {row[0]} {row[1]}")
        table[pos[s]][pos[t]] = _int(row[2], "exponent")
    if any(e is None for r in table for e in r):
        raise SpecParseError(f"cocycle table needs all {k * k} entries")
    return TwoCocycle(S, m, tuple(tuple(r) for r in table))  # type: ignore[arg-type]


def load_instance(spec: InstanceSpec, max_order: Optional[int] = None,
                  require_f: bool = False) -> LoadedInstance:
    if max_order is None:
        max_order = int(spec.options.get("max_order", DEFAULT_MAX_ORDER))
    G = parse_group_spec(spec.group, max_order)
    S = subgroup_generated(G, [G.element(x) for x in spec.s_generators])
    alpha = parse_cocycle(G, S, spec.cocycle)
    bad = cocycle_violations(alpha, limit=1)
    if bad:
        lab = ", ".join(G.labels[x] for x in bad[0])
        raise HypothesisError(f"not a normalized 2-cocycle; first violation at ({lab})")
    normalized = False
    if not alpha.inverse_normalized:
        alpha, _ = normalize_inverse_pairs(alpha)
        normalized = True
    if not is_nondegenerate(alpha):
        raise HypothesisError("cocycle is degenerate on S")
    F = None
    if spec.f_generators is not None:
        F = subgroup_generated(G, [G.element(x) for x in spec.f_generators])
    elif require_f:
        raise SpecParseError("this command needs an [F] section")
    return LoadedInstance(G, S, alpha, F, normalized)
