"""Command line front end: ``validate``, ``example`` and ``analyze``.

Exit codes: 0 success or PASS, 1 usage or I/O problem, 2 invalid
construction data, 3 scenario FAIL.  Reports are JSON (sorted keys) or
plain text and always embed the run manifest, so identical invocations
produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import (
    COMPLETE,
    check_main_hypothesis,
    complement_scan,
    completeness_report,
    face_favoring_order,
    fingerprint_orders,
    mu_map,
)
from .laurent import LaurentPoly
from .construction import ConstructionError, load_fixture, load_spec, validate
from .orders import (
    TermOrder,
    as_fraction,
    doubled_order,
    grlex,
    lex,
    order_from_weights,
)
from .sagbi import algebra_min_generators, degree_monoid

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_FAIL = 0, 1, 2, 3
ANALYSES = ("degrees", "mingens", "completeness", "mu", "complement", "hypothesis", "fingerprints")
EXAMPLES = ("rs", "quadratic", "hanoi", "doubled")


class UsageError(Exception):
    pass


def parse_order(selector: str, dim: int) -> TermOrder:
    """Order selectors: ``lex12``/``lex21``/``lexPERM``, ``grlex``,
    ``weight:w1,w2,...`` (identity completion), ``weight-grlex:...``,
    ``doubled:LAMBDA``, or a path to an order JSON file."""
    s = selector.strip()
    if s == "grlex":
        return grlex(dim)
    if s.startswith("lex"):
        digits = s[3:] or "".join(str(i + 1) for i in range(dim))
        perm = [int(ch) - 1 for ch in digits]
        if sorted(perm) != list(range(dim)):
            raise UsageError(f"{s!r} is not a permutation of 1..{dim}")
        return lex(dim, perm)
    for prefix, completion in (("weight:", "identity"), ("weight-grlex:", "grlex")):
        if s.startswith(prefix):
            w = [as_fraction(x) for x in s[len(prefix):].split(",")]
            if len(w) != dim:
                raise UsageError(f"weight {s!r} has {len(w)} entries, expected {dim}")
            return order_from_weights([w], completion=completion, name=f"o({s[len(prefix):]})")
    if s.startswith("doubled:"):
        if dim % 2:
            raise UsageError("doubled orders need an even dimension")
        return doubled_order(dim // 2, as_fraction(s[len("doubled:"):]))
    path = Path(s)
    if path.suffix == ".json" or path.exists():
        with open(path, encoding="utf-8") as fh:
            order = TermOrder.from_json(json.load(fh))
        if order.dim != dim:
            raise UsageError(f"order in {s} has dimension {order.dim}, expected {dim}")
        return order
    raise UsageError(f"unknown order selector {selector!r}")


def parse_orders(text: str, dim: int) -> list[TermOrder]:
    """Semicolon separated selectors, or a JSON file holding a list of orders."""
    path = Path(text)
    if path.suffix == ".json":
        with open(path, encoding="utf-8") as fh:
            return [TermOrder.from_json(o) for o in json.load(fh)]
    return [parse_order(s, dim) for s in text.split(";") if s.strip()]


def _manifest(args, inputs: list[str]) -> dict:
    params = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("func", "spec", "out", "command") and v is not None
    }
    return {
        "command": args.command,
        "inputs": inputs,
        "parameters": {k: str(v) for k, v in params.items()},
        "output": args.out or "-",
        "tool_version": __version__,
    }


def _emit(args, report: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        out = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        m = report["manifest"]
        head = f"# {m['command']} {' '.join(m['inputs'])} " + " ".join(
            f"{k}={v}" for k, v in m["parameters"].items()
        )
        out = "\n".join([head.rstrip()] + text_lines) + "\n"
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def _load(args):
    spec = load_spec(args.spec)
    return validate(spec)


def cmd_validate(args) -> int:
    spec = load_spec(args.spec)
    c = validate(spec)
    report = {
        "manifest": _manifest(args, [args.spec]),
        "valid": True,
        "name": spec.name,
        "dim": spec.dim,
        "embeddings": spec.r,
        "source_generators": spec.N,
        "graded": c.graded,
        "algebra_generators": [f.to_json() for f in c.A_poly_gens] + [h.to_json() for h in c.J_gens],
        "warnings": list(c.warnings),
    }
    lines = [
        f"valid: {spec.name or args.spec}  dim={spec.dim}  r={spec.r}  N={spec.N}  graded={c.graded}",
        f"algebra generators: {len(c.A_poly_gens)} from phi(I), {len(c.J_gens)} from J",
    ] + [f"warning: {w}" for w in c.warnings]
    _emit(args, report, lines)
    return EXIT_OK


def _check(name: str, ok: bool, anchor: str, detail: str) -> dict:
    return {"check": name, "status": "PASS" if ok else "FAIL", "anchor": anchor, "detail": detail}


def _example_rs(args, D) -> list[dict]:
    c = validate(load_fixture("rs"))
    order = parse_order(args.order or "lex12", 2)
    rep = degree_monoid(c, order, D, with_generators=False)
    if order.less((0, 1), (1, 0)):
        big = lambda i, j: (i, j)
    else:
        big = lambda i, j: (j, i)
    expected = {(0, 0)} | {big(i, 0) for i in range(1, D + 1)}
    expected |= {(i, j) for i in range(1, D) for j in range(1, D) if i + j <= D}
    return [
        _check("degree set", rep.degrees == expected, "non-finitely-generated-monoid",
               f"{len(rep.degrees)} degrees, expected {len(expected)}"),
        _check("minimal generator count", len(rep.monoid_min_gens) == D, "non-finitely-generated-monoid",
               f"{len(rep.monoid_min_gens)} minimal generators at bound {D}"),
    ]


def _example_quadratic(args, D) -> list[dict]:
    c = validate(load_fixture("quadratic"))
    order = parse_order(args.order or "weight:-2,-3", 2)
    rep = degree_monoid(c, order, D, with_generators=False)
    cr = completeness_report(c, order, D)
    return [
        _check("e1 in degree set", (1, 0) in rep.degrees, "finitely-generated-degree-set",
               f"bound {D}"),
        _check("e2 in degree set", (0, 1) in rep.degrees, "finitely-generated-degree-set",
               f"bound {D}"),
        _check("completeness", cr.verdict == COMPLETE, "face-completeness",
               f"verdict {cr.verdict} at bounds {cr.bounds[0]}, {cr.bounds[1]}"),
    ]


def hanoi_orders(c, seed: int, extra: int = 2) -> list[TermOrder]:
    """lex12, lex21 and ``extra`` face-favoring orders per face from seeded base weights."""
    rng = random.Random(seed)
    orders = [lex(c.dim), lex(c.dim, list(reversed(range(c.dim))))]
    for i in range(1, c.spec.r + 1):
        for _ in range(extra):
            base = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(c.dim)]
            orders.append(face_favoring_order(c, i, base, 1)[0])
    return orders


def _example_hanoi(args, D) -> list[dict]:
    c = validate(load_fixture("hanoi"))
    orders = hanoi_orders(c, args.seed or 0)
    fp = fingerprint_orders(c, orders, D)
    J_part = degree_monoid(c, orders[0], D, with_generators=False).part("J")
    matches = []
    for i in range(c.spec.r):
        a = c.phi_images[i][0].degree(orders[0])
        line = {tuple(l * x for x in a) for l in range(1, int(D) + 1) if c.grade(a) * l <= D}
        matches.append(any(degs == frozenset({(0, 0)} | line | J_part) for degs, _ in fp.classes))
    return [
        _check("class count", fp.count == c.spec.r, "initial-algebra-count",
               f"{fp.count} classes over {len(orders)} orders at bound {D}"),
        _check("class representatives", all(matches), "initial-algebra-count",
               "each class is k[x^a_i] + J truncated" if all(matches) else f"matches {matches}"),
    ]


def _example_doubled(args, D) -> list[dict]:
    c = validate(load_fixture("doubled"))
    lam = as_fraction(args.lam if args.lam is not None else 2)
    mu = as_fraction(args.mu if args.mu is not None else "1/2")
    o_lam, o_mu = doubled_order(2, lam), doubled_order(2, mu)
    fp = fingerprint_orders(c, [o_lam, o_mu], D)
    f11 = LaurentPoly.zero(c.dim)
    for t in c.source_terms(D):
        if t.multi_index == (1, 1):
            f11 = t.phi
    lead_lam, lead_mu = f11.degree(o_lam), f11.degree(o_mu)
    return [
        _check("distinct fingerprints", fp.count == 2, "order-dependent-initial-term",
               f"{fp.count} classes for lambda={lam}, mu={mu}"),
        _check("witness pivots", (lead_lam, lead_mu) == ((0, 0, 1, 1), (1, 1, 0, 0)),
               "order-dependent-initial-term",
               f"f_(1,1) leads with {lead_lam} and {lead_mu}"),
    ]


EXAMPLE_DEFAULTS = {"rs": 8, "quadratic": 8, "hanoi": 9, "doubled": 4}


def cmd_example(args) -> int:
    D = as_fraction(args.max_grade if args.max_grade is not None else EXAMPLE_DEFAULTS[args.name])
    if D.denominator != 1 or D < 0:
        raise UsageError("--max-grade must be a nonnegative integer for examples")
    D = int(D)
    runner = {"rs": _example_rs, "quadratic": _example_quadratic,
              "hanoi": _example_hanoi, "doubled": _example_doubled}[args.name]
    checks = runner(args, D)
    ok = all(ch["status"] == "PASS" for ch in checks)
    report = {
        "manifest": _manifest(args, [f"fixtures/{args.name}.json"]),
        "example": args.name,
        "checks": checks,
        "result": "PASS" if ok else "FAIL",
    }
    lines = [f"{ch['status']} {args.name}: {ch['check']} [{ch['anchor']}] {ch['detail']}" for ch in checks]
    lines.append(f"{report['result']} {args.name}")
    _emit(args, report, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_analyze(args) -> int:
    if not args.spec:
        raise UsageError("analyze needs --spec")
    c = _load(args)
    D = as_fraction(args.max_grade if args.max_grade is not None else 6)
    which = args.which
    if which == "fingerprints":
        if not args.orders:
            raise UsageError("fingerprints needs --orders")
        orders = parse_orders(args.orders, c.dim)
    else:
        order = parse_order(args.order or "lex" + "".join(str(i + 1) for i in range(c.dim)), c.dim)
    lines: list[str]
    if which == "degrees":
        rep = degree_monoid(c, order, D)
        body, lines = rep.to_json(), rep.render_text().splitlines()
    elif which == "mingens":
        gens = algebra_min_generators(c, order, D)
        body = {
            "generators": [{"grade": str(g), "representatives": [f.to_json() for f in fs]} for g, fs in gens],
            "truncated": True,
            "anchor": "minimal-algebra-generators",
        }
        lines = [f"grade {g}: " + "; ".join(f.pretty() for f in fs) for g, fs in gens]
    elif which == "completeness":
        rep = completeness_report(c, order, D)
        body = rep.to_json()
        lines = [f"verdict: {rep.verdict}"] + [
            f"bound {rep.bounds[k]} face {f.face}: {f.status} ({len(f.part)} degrees)"
            for k, per in enumerate(rep.faces) for f in per
        ] + [f"note: {n}" for n in rep.notes]
    elif which == "mu":
        pair = tuple(int(x) for x in (args.pair or "1,2").split(","))
        mm = mu_map(c, order, D, pair)
        body = mm.to_json()
        lines = [f"mu{r.a} = {r.mu}  in_deg_psi_I={r.in_deg_psi_I}  touches_bound={r.touches_bound}" for r in mm]
        lines.append(f"injective={mm.injective}  all_outside={mm.all_outside}")
    elif which == "complement":
        scan = complement_scan(c, order, D)
        body = scan.to_json()
        lines = [f"grade {g}: new {n}, cumulative {k}" for g, n, k in scan.rows]
        lines.append(f"strictly_increasing={scan.strictly_increasing}")
    elif which == "hypothesis":
        verdicts = check_main_hypothesis(c, order)
        body = {"verdicts": [v.to_json() for v in verdicts]}
        lines = [f"embedding {v.embedding}: {v.verdict} ({v.witness})" for v in verdicts]
    else:
        fp = fingerprint_orders(c, orders, D)
        body = fp.to_json()
        lines = [f"classes: {fp.count}"] + [
            f"  {' '.join(str(orders[k]) for k in members)}: {len(degs)} degrees"
            for degs, members in fp.classes
        ]
    report = {"manifest": _manifest(args, [args.spec]), "analysis": which, "report": body}
    _emit(args, report, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="initalg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    v = sub.add_parser("validate", help="check a construction spec")
    v.add_argument("spec_path", nargs="?", help="spec JSON (or use --spec)")
    v.add_argument("--spec")
    common(v)
    v.set_defaults(func=cmd_validate)

    e = sub.add_parser("example", help="run a scripted example scenario")
    e.add_argument("name", choices=EXAMPLES)
    e.add_argument("--order")
    e.add_argument("--max-grade")
    e.add_argument("--seed", type=int)
    e.add_argument("--lambda", dest="lam")
    e.add_argument("--mu")
    common(e)
    e.set_defaults(func=cmd_example)

    a = sub.add_parser("analyze", help="run one analysis on a spec")
    a.add_argument("which", choices=ANALYSES)
    a.add_argument("--spec")
    a.add_argument("--order")
    a.add_argument("--orders", help="';'-separated selectors or a JSON list of orders")
    a.add_argument("--max-grade")
    a.add_argument("--pair", help="embedding pair for mu, e.g. 1,2")
    a.add_argument("--seed", type=int)
    common(a)
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command == "validate":
        args.spec = args.spec or args.spec_path
        if not args.spec:
            print("error: validate needs a spec path", file=sys.stderr)
            return EXIT_USAGE
        del args.spec_path
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"invalid construction: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, json.JSONDecodeError, UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
