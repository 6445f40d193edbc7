"""Command line front end.

Exit codes: 0 computed, 1 parse or usage error, 2 hypothesis violation,
3 size limit, 4 verification failure or internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .errors import ConsistencyError, HypothesisError, SizeLimitError, SpecParseError
from .galois import GaloisObject, build, format_basis, format_element
from .groups import DEFAULT_MAX_ORDER, Subgroup, is_normal
from .instances import (CATALOG, Instance, catalog, klein_dihedral, nonsolvable,
                        supersolvable, symmetric)
from .invariants import f_orbits, orbit_vector
from .normality import (NormalityVerdict, hopf_subalgebra_normal, is_simple_deformation,
                        mu_stable_criterion, mu_stable_direct)
from .specfile import InstanceSpec, LoadedInstance, load_instance, parse_instance
from .verify import SUITES, inject_fault, run_suites

EXIT_OK, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_SIZE, EXIT_FAIL = 0, 1, 2, 3, 4


def _load(path: str, max_order: Optional[int], require_f: bool = False):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise SpecParseError(f"cannot read {path}: {e}") from None
    spec = parse_instance(text)
    inst = load_instance(spec, max_order, require_f=require_f)
    return spec, inst, build(inst.G, inst.S, inst.alpha)


def _subgroup_json(F: Subgroup) -> dict:
    return {"order": F.order, "index": F.index(),
            "generators": [F.parent.labels[g] for g in F.generators()]}


def _verdict_json(A: GaloisObject, v: NormalityVerdict) -> dict:
    lab = A.G.labels
    return {
        "stable": v.stable,
        "regular_classes": [format_basis(A, b) for b in v.regular_classes],
        "witnesses": [{"class": format_basis(A, b), "f": lab[f]} for b, f in v.witnesses],
    }


def _header(spec: InstanceSpec, inst: LoadedInstance, A: GaloisObject) -> list[str]:
    out = [f"group: {spec.group} (order {A.G.order})",
           f"S: <{', '.join(spec.s_generators)}> (order {A.S.order}, index {len(A.cosets)})",
           f"cocycle modulus: {A.modulus}"]
    if inst.normalized:
        out.append("cocycle: replaced by a cohomologous inverse-normalized cocycle")
    return out


def cmd_analyze(args) -> int:
    spec, inst, A = _load(args.instance, args.max_order, require_f=True)
    F = inst.F
    G = A.G
    normal = is_normal(G, F)
    verdict = mu_stable_criterion(A, F)
    if normal:
        shortcut = hopf_subalgebra_normal(A, F)
        if shortcut.stable != verdict.stable:
            raise ConsistencyError("normal-F test disagrees with the orbit criterion")
    oracle = mu_stable_direct(A, F) if args.oracle else None
    if oracle is not None and oracle != verdict.stable:
        raise ConsistencyError("direct homogeneous-component check disagrees with criterion")
    contains = A.S.issubset(F)
    if verdict.stable:
        summary = "stable; normal Hopf subalgebra" if normal else "stable"
    else:
        summary = ("not stable; deformation quotient not conormal" if normal
                   else "not stable")
    if args.machine:
        data = {"group": spec.group, "order": G.order, "S_order": A.S.order,
                "modulus": A.modulus, "F": _subgroup_json(F), "F_normal": normal,
                "S_in_F": contains, "summary": summary, **_verdict_json(A, verdict)}
        if oracle is not None:
            data["oracle_stable"] = oracle
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
        return EXIT_OK
    lines = _header(spec, inst, A)
    lines.append(f"F: order {F.order}, index {F.index()}, normal: {'yes' if normal else 'no'}, "
                 f"S in F: {'yes' if contains else 'no'}")
    lines.append(f"regular classes: {len(verdict.regular_classes)}")
    for b in verdict.regular_classes:
        lines.append(f"  {format_basis(A, b)}  degree {G.labels[A.mu_degree(b)]}")
    for b, f in verdict.witnesses:
        lines.append(f"witness: {format_basis(A, b)} with f = {G.labels[f]}")
    if oracle is not None:
        lines.append(f"oracle: {'stable' if oracle else 'not stable'} (agrees)")
    lines.append(f"verdict: {summary}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    spec, inst, A = _load(args.instance, args.max_order)
    report = is_simple_deformation(A, jobs=args.jobs)
    G = A.G
    if args.machine:
        rows = [{**_subgroup_json(r.F), "S_in_F": r.contains_S, "proper": r.proper,
                 **_verdict_json(A, r.verdict)} for r in report.rows]
        print(json.dumps({"group": spec.group, "order": G.order, "S_order": A.S.order,
                          "modulus": A.modulus, "normal_subgroups": rows,
                          "simple": report.simple}, indent=2, sort_keys=True,
                         ensure_ascii=False))
        return EXIT_OK
    lines = _header(spec, inst, A)
    lines.append(f"{'order':>6} {'index':>6} {'S<=F':>5} {'stable':>7}  generators")
    for r in report.rows:
        gens = ", ".join(G.labels[g] for g in r.F.generators()) or "-"
        lines.append(f"{r.F.order:>6} {r.F.index():>6} {'yes' if r.contains_S else 'no':>5} "
                     f"{'yes' if r.verdict.stable else 'no':>7}  {gens}")
    lines.append(f"simple: {'true' if report.simple else 'false'}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_invariant_basis(args) -> int:
    spec, inst, A = _load(args.instance, args.max_order, require_f=True)
    F = inst.F
    orbits = f_orbits(A, F)
    vecs = []
    lines = _header(spec, inst, A)
    lines.append(f"F: order {F.order}, index {F.index()}; {len(orbits)} orbits")
    for o in orbits:
        v = orbit_vector(A, F, o) if o.regular else None
        lines.append(f"orbit {format_basis(A, o.representative)}: size {len(o)}, "
                     f"stabilizer {o.stabilizer.order}, regular {'yes' if o.regular else 'no'}")
        if v is not None:
            lines.append(f"  v = {format_element(A, v)}")
            vecs.append({"representative": format_basis(A, o.representative),
                         "vector": format_element(A, v)})
    lines.append(f"dim A^F = {len(vecs)}")
    if args.machine:
        print(json.dumps({"group": spec.group, "F": _subgroup_json(F), "orbits": len(orbits),
                          "basis": vecs, "dimension": len(vecs)}, indent=2, sort_keys=True,
                         ensure_ascii=False))
    else:
        print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = args.suites or None
    for s in suites or []:
        if s not in SUITES:
            raise SpecParseError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    names = args.instances or list(CATALOG)
    for n in names:
        if n not in CATALOG:
            raise SpecParseError(f"unknown instance {n!r}")
    instances = catalog(names)
    if args.inject_fault:
        instances = [f for f in (inject_fault(i) for i in instances) if f is not None]
    results = run_suites(instances, suites, seed=args.seed)
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status} {r.instance:<28} {r.suite:<14} {r.checks} checks")
        for msg in r.failures[:3]:
            print(f"     {msg}")
        failed += not r.ok
    checks = sum(r.checks for r in results)
    print(f"{len(instances)} instances, {len(results)} suite runs, {checks} checks, "
          f"{failed} failed")
    return EXIT_FAIL if failed else EXIT_OK


def _f_line(G, F: Subgroup) -> list[str]:
    return [G.labels[g] for g in F.generators()]


def _spec_for(inst: Instance, f_gens: Optional[list[str]]) -> InstanceSpec:
    return InstanceSpec(inst.group_spec, inst.s_labels, inst.cocycle_lines, f_gens)


def example_specs(name: str) -> dict[str, InstanceSpec]:
    kind, _, arg = name.partition(":")
    from .groups import subgroup_generated
    out = {}
    if kind == "symmetric":
        n = int(arg)
        for variant in ("odd", "even"):
            inst = symmetric(n, variant)
            G = inst.G
            An = subgroup_generated(G, [G.element(f"({','.join(map(str, (0, 1, k)))})")
                                        for k in range(2, n)])
            out[f"symmetric_{n}_{variant}"] = _spec_for(inst, _f_line(G, An))
    elif kind == "nonsolvable":
        inst = nonsolvable(int(arg))
        G = inst.G
        F = subgroup_generated(G, [g * (G.order // 60) for g in G.factors[0].gens])
        out[f"nonsolvable_{arg}"] = _spec_for(inst, _f_line(G, F))
    elif kind == "supersolvable":
        p, q, r = (int(x) for x in arg.split(","))
        inst = supersolvable(p, q, r)
        out[f"supersolvable_{p}_{q}_{r}"] = _spec_for(inst, None)
    elif kind == "klein-dihedral":
        inst = klein_dihedral()
        out["klein_dihedral"] = _spec_for(inst, ["r"])
    else:
        raise SpecParseError(f"unknown example family {name!r}")
    return out


def cmd_examples(args) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for stem, spec in example_specs(args.name).items():
        path = outdir / f"{stem}.txt"
        path.write_text(spec.render())
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfnormal",
        description="Normality of Hopf subalgebras in cocycle deformations of finite groups.")
    p.add_argument("--max-order", type=int, default=None,
                   help=f"group order cap (default {DEFAULT_MAX_ORDER})")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="decide stability of A^F for one subgroup F")
    a.add_argument("instance")
    a.add_argument("--machine", action="store_true", help="JSON output")
    a.add_argument("--oracle", action="store_true",
                   help="also run the direct homogeneous-component check")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", help="test every normal subgroup; decide simplicity")
    c.add_argument("instance")
    c.add_argument("--machine", action="store_true")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_classify)

    b = sub.add_parser("invariant-basis", help="orbits and the basis of A^F")
    b.add_argument("instance")
    b.add_argument("--machine", action="store_true")
    b.set_defaults(func=cmd_invariant_basis)

    v = sub.add_parser("verify", help="run property suites over the built-in catalog")
    v.add_argument("suites", nargs="*", help=f"any of: {', '.join(SUITES)}")
    v.add_argument("--instances", nargs="*", default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--inject-fault", action="store_true",
                   help="negative control: flip one cocycle entry per instance")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("examples", help="write ready-to-run instance files")
    e.add_argument("name", help="symmetric:n | nonsolvable:p | supersolvable:p,q,r | klein-dihedral")
    e.add_argument("--out", default=".")
    e.set_defaults(func=cmd_examples)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        return args.func(args)
    except SpecParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except HypothesisError as e:
        print(f"hypothesis violation: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except SizeLimitError as e:
        print(f"size limit: {e}", file=sys.stderr)
        return EXIT_SIZE
    except ConsistencyError as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
