"""Command-line front end.

Exit codes: 0 success (audit: witness found), 1 audit found no witness,
2 invalid parameters, 3 could not write an output file, 4 a verification
failed, 5 J1 generator data missing or corrupt.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path
from typing import Callable, Optional

from . import __version__
from .criteria import audit_nonsolvability
from .families import (
    Family,
    GroupFamilySpec,
    has_abelian_sylow2,
    mu_of,
    order_coprime_to_5,
    order_of,
    order_primes,
    parse_group,
    ree_components,
)
from .groups import (
    GeneratorFileError,
    build_witness_groups,
    enumerate_j1,
    enumerate_psl2,
    load_j1_generators,
    verify_unrecognizability,
)
from .groups.j1 import default_data_path
from .groups.linear import MAX_Q as PSL2_MAX_Q
from .reporting import ResultCache, default_cache_dir, dumps, envelope
from .spectra import direct_square_mu, independence_number, is_complete, prime_graph

EXIT_OK, EXIT_NO_WITNESS, EXIT_USAGE, EXIT_WRITE, EXIT_VERIFY, EXIT_DATA = range(6)

PSL2_SAMPLE = (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32)
WITNESS_SAMPLE = (4, 5, 7, 8, 9, 11, 13, 16)


class UsageError(Exception):
    pass


def _group(family: str, q: Optional[int]) -> GroupFamilySpec:
    try:
        return parse_group(family, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _safe_order(spec: GroupFamilySpec) -> Optional[int]:
    try:
        return order_of(spec)
    except OverflowError:
        return None


def _spectrum_of(spec: GroupFamilySpec, squared: bool):
    mu = mu_of(spec)
    return direct_square_mu(mu) if squared else mu


# -- commands: each returns a report envelope --


def _run(cache: Optional[ResultCache], command: str, params: dict, compute: Callable[[], dict]) -> dict:
    if cache is not None:
        hit = cache.get(command, params)
        if hit is not None:
            return hit
    env = envelope(command, params, compute())
    if cache is not None:
        cache.put(env)
    return env


def cmd_spectrum(family: str, q: Optional[int] = None, squared: bool = False, cache=None) -> dict:
    spec = _group(family, q)

    def compute():
        mu = mu_of(spec)
        result = {
            "group": spec.name,
            "mu": list(mu.mu),
            "order": _safe_order(spec),
            "primes": list(order_primes(spec)),
            "abelian_sylow2": has_abelian_sylow2(spec),
            "order_coprime_to_5": order_coprime_to_5(spec),
        }
        if spec.family is Family.SMALL_REE:
            comp = ree_components(spec.alpha)
            result["components"] = {
                "m": list(comp.m),
                "pi": [sorted(s) for s in comp.pi],
                "rho": {str(i): sorted(comp.rho_(i)) for i in range(3, 7)},
            }
        if squared:
            # values past 2**53 are emitted as strings, so no 63-bit cap here
            result["mu_square"] = list(direct_square_mu(mu, limit=None).mu)
        return result

    return _run(cache, "spectrum", {"family": family, "q": q, "squared": squared}, compute)


def cmd_graph(family: str, q: Optional[int] = None, squared: bool = False, cache=None) -> dict:
    spec = _group(family, q)

    def compute():
        g = prime_graph(_spectrum_of(spec, squared))
        t, witness = independence_number(g)
        name = spec.name.replace("(", "_").replace(")", "") + ("_sq" if squared else "")
        return {
            "group": spec.name + ("^2" if squared else ""),
            "vertices": list(g.vertices),
            "edges": [list(e) for e in g.edge_list()],
            "independence_number": t,
            "independent_set": list(witness),
            "complete": is_complete(g),
            "dot": g.to_dot(name),
        }

    return _run(cache, "graph", {"family": family, "q": q, "squared": squared}, compute)


def cmd_audit(family: str, q: Optional[int] = None, cache=None) -> dict:
    spec = _group(family, q)

    def compute():
        square = direct_square_mu(mu_of(spec))
        result = audit_nonsolvability(square, f"mu({spec.name} x {spec.name})").to_dict()
        result["mu"] = list(square.mu)
        return result

    return _run(cache, "audit", {"family": family, "q": q}, compute)


def _check(name: str, expected, observed) -> dict:
    return {"name": name, "expected": expected, "observed": observed, "pass": expected == observed}


def _verify_psl2(q: int) -> list[dict]:
    spec = _group("L2", q)
    e = enumerate_psl2(q)
    return [
        _check(f"|L2({q})|", order_of(spec), e.order),
        _check(f"mu(L2({q}))", list(mu_of(spec).mu), list(e.spectrum.mu)),
    ]


def _verify_j1(data_path: Path) -> list[dict]:
    gens = load_j1_generators(data_path)
    e = enumerate_j1(gens)
    spec = GroupFamilySpec.janko1()
    return [
        _check("|J1|", order_of(spec), e.order),
        _check("mu(J1)", list(mu_of(spec).mu), list(e.spectrum.mu)),
    ]


def _verify_witness(q: int) -> list[dict]:
    f1, f2 = build_witness_groups(q)
    report = verify_unrecognizability(q)
    law = all(grp.element_order(g) == grp.predicted_order(g) for grp in (f1, f2) for g in grp.elements())
    return [
        _check(f"mu(F1 x F2) = mu(L2({q})^2)", list(report.mu_square.mu), list(report.mu_witness.mu)),
        _check(f"mu(F1 x F2) closed form, q={q}", list(report.mu_formula.mu), list(report.mu_witness.mu)),
        _check(f"Frobenius order law, q={q}", True, law),
    ]


def cmd_verify(target: str, q: Optional[int] = None, data_path=None, cache=None) -> dict:
    """Run a brute-force check. Raises ``GeneratorFileError`` on bad J1 data."""
    data_path = default_data_path() if data_path is None else Path(data_path)
    if target not in ("psl2", "j1", "witness", "all"):
        raise UsageError(f"unknown verify target {target!r}; expected psl2, j1, witness or all")
    needs_q = target in ("psl2", "witness")
    if needs_q and q is None:
        raise UsageError(f"verify {target} needs q")
    if not needs_q and q is not None:
        raise UsageError(f"verify {target} takes no q")
    if target == "psl2" and not 4 <= q <= PSL2_MAX_Q:
        raise UsageError(f"psl2 verification needs 4 <= q <= {PSL2_MAX_Q}")
    if target == "witness":
        try:
            build_witness_groups(q)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    params = {"target": target, "q": q}
    if target in ("j1", "all"):
        try:
            params["j1_data_sha256"] = hashlib.sha256(data_path.read_bytes()).hexdigest()
        except OSError as exc:
            raise GeneratorFileError(f"{data_path}: cannot read generator file: {exc}") from None

    def compute():
        if target == "psl2":
            checks = _verify_psl2(q)
        elif target == "j1":
            checks = _verify_j1(data_path)
        elif target == "witness":
            checks = _verify_witness(q)
        else:
            checks = [c for n in PSL2_SAMPLE for c in _verify_psl2(n)]
            checks += _verify_j1(data_path)
            checks += [c for n in WITNESS_SAMPLE for c in _verify_witness(n)]
        return {"checks": checks, "all_pass": all(c["pass"] for c in checks)}

    return _run(cache, "verify", params, compute)


# -- rendering --


def _fmt(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def render_text(env: dict) -> str:
    cmd, r = env["command"], env["result"]
    lines: list[str] = []
    if cmd == "spectrum":
        lines.append(f"group     {r['group']}")
        lines.append(f"order     {r['order'] if r['order'] is not None else '(exceeds 63 bits)'}")
        lines.append(f"primes    {_fmt(r['primes'])}")
        lines.append(f"mu        {_fmt(r['mu'])}")
        if "components" in r:
            lines.append(f"m1..m6    {_fmt(r['components']['m'])}")
            for i, rho in r["components"]["rho"].items():
                lines.append(f"rho{i}      {_fmt(rho)}")
        if "mu_square" in r:
            lines.append(f"mu(LxL)   {_fmt(r['mu_square'])}")
    elif cmd == "graph":
        lines.append(f"graph     Gamma({r['group']})")
        lines.append(f"vertices  {_fmt(r['vertices'])}")
        lines.append("edges     " + (", ".join(f"{a}-{b}" for a, b in r["edges"]) or "(none)"))
        lines.append(f"t         {r['independence_number']}  witness {_fmt(r['independent_set'])}")
        lines.append(f"complete  {'yes' if r['complete'] else 'no'}")
    elif cmd == "audit":
        lines.append(f"source    {r['source']}")
        lines.append(f"searched  {r['search_space']} prime subsets")
        lines.append(f"verdict   {r['verdict']}")
        w = r["witness"]
        if w is not None:
            lines.append(f"primes    {_fmt(w['primes'])}")
            for item in w["products"]:
                mark = "in" if item["in_spectrum"] else "not in"
                lines.append(f"  {item['product']:>12}  {mark} spectrum")
    elif cmd == "verify":
        width = max(len(c["name"]) for c in r["checks"])
        for c in r["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            lines.append(f"{status}  {c['name']:<{width}}  {c['observed']}")
        lines.append("all checks passed" if r["all_pass"] else "some checks FAILED")
    return "\n".join(lines) + "\n"


def exit_code(env: dict) -> int:
    if env["command"] == "audit" and env["result"]["witness"] is None:
        return EXIT_NO_WITNESS
    if env["command"] == "verify" and not env["result"]["all_pass"]:
        return EXIT_VERIFY
    return EXIT_OK


# -- argument parsing --


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # shared so the flags work before or after the verb
    d = argparse.SUPPRESS if suppress else None
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="print the JSON report envelope")
    parent.add_argument("--dot", metavar="PATH", default=d, help="write the prime graph in DOT format")
    parent.add_argument("--cache-dir", metavar="PATH", default=d,
                        help="result cache directory (env ISOSPEC_CACHE_DIR)")
    parent.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="neither read nor write the cache")
    parent.add_argument("--j1-data", metavar="PATH", default=d, help="J1 generator file")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isospec",
        description="Element-order spectra, prime graphs and nonsolvability audits.",
        parents=[_global_flags(False)],
    )
    parser.add_argument("--version", action="version", version=f"isospec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    flags = _global_flags(True)

    def group_args(p):
        p.add_argument("family", choices=["L2", "R", "J1"])
        p.add_argument("q", nargs="?", type=int, help="field order (L2, R)")

    p = sub.add_parser("spectrum", parents=[flags], help="mu, order and primes of a group")
    group_args(p)
    p.add_argument("--squared", action="store_true", help="also give mu of the direct square")

    p = sub.add_parser("graph", parents=[flags], help="prime graph and independence number")
    group_args(p)
    p.add_argument("--squared", action="store_true", help="use the direct square")

    p = sub.add_parser("audit", parents=[flags], help="nonsolvability witness search on L x L")
    group_args(p)

    p = sub.add_parser("verify", parents=[flags], help="brute-force checks against the formulas")
    p.add_argument("target", help="psl2 | j1 | witness | all")
    p.add_argument("q", nargs="?", type=int)
    return parser


def _dispatch(args, cache) -> dict:
    if args.command in ("spectrum", "graph", "audit"):
        if args.family == "J1" and args.q is not None:
            raise UsageError("J1 takes no q")
        if args.family != "J1" and args.q is None:
            raise UsageError(f"{args.family} needs q")
    if args.dot and args.command != "graph":
        raise UsageError("--dot only applies to the graph command")
    if args.command == "spectrum":
        return cmd_spectrum(args.family, args.q, args.squared, cache)
    if args.command == "graph":
        return cmd_graph(args.family, args.q, args.squared, cache)
    if args.command == "audit":
        return cmd_audit(args.family, args.q, cache)
    return cmd_verify(args.target, args.q, args.j1_data, cache)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    cache = None if args.no_cache else ResultCache(Path(args.cache_dir or default_cache_dir()))
    try:
        env = _dispatch(args, cache)
    except UsageError as exc:
        print(f"isospec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"isospec: error: parameters too large for 63-bit arithmetic ({exc})", file=sys.stderr)
        return EXIT_USAGE
    except GeneratorFileError as exc:
        print(f"isospec: J1 data error: {exc}", file=sys.stderr)
        return EXIT_DATA

    if args.dot:
        try:
            Path(args.dot).write_text(env["result"]["dot"])
        except OSError as exc:
            print(f"isospec: cannot write {args.dot}: {exc}", file=sys.stderr)
            return EXIT_WRITE

    sys.stdout.write(dumps(env) if args.json else render_text(env))
    return exit_code(env)


if __name__ == "__main__":
    sys.exit(main())
