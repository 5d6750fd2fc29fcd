"""Command-line front end.

Exit codes: 0 decomposable / property holds, 1 not (certificate printed),
2 usage or input error, 3 budget or search exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators, oracle
from .decomposition import (CheckResult, OddArcCount, check_bipartite, check_fractional,
                            check_tournament, decompose, quick_tournament_certificate,
                            result_of)
from .digraph import is_tournament
from .errors import CertificateSearchExhausted, P3Error, SearchExhausted
from .euler import line_hamilton_cycle
from .linegraph import P3Policy, build_line_graph, line_graph_connected
from .textio import format_digraph, read_digraph

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _policy(args, default=P3Policy.STRICT) -> P3Policy:
    return default if args.policy is None else P3Policy.parse(args.policy)


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_gen(args) -> int:
    params: dict = {}
    kind = args.kind
    if kind in ("transitive_tournament", "random_tournament"):
        params = {"n": args.n}
    elif kind == "complete_bipartite_orientation":
        params = {"a": args.a, "b": args.b}
    elif kind == "random_bipartite_digraph":
        params = {"a": args.a, "b": args.b, "p": args.p}
    elif kind == "random_strict_digraph":
        params = {"n": args.n, "p": args.p, "asymmetric": not args.digons}
    elif kind == "random_eulerian":
        params = {"n": args.n, "m": args.m, "asymmetric": not args.digons}
    if any(v is None for v in params.values()):
        missing = [k for k, v in params.items() if v is None]
        raise UsageError(f"{kind} needs --{' --'.join(missing)}")
    if generators._KINDS[kind][1] and args.seed is None:
        raise UsageError(f"{kind} is randomized and requires --seed")
    D = generators.generate(kind, params, args.seed)
    side = args.a if kind in ("complete_bipartite_orientation", "random_bipartite_digraph") else None
    text = format_digraph(D, side)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_linegraph(args) -> int:
    D = read_digraph(args.file).digraph
    L = build_line_graph(D, _policy(args))
    if args.format == "dot":
        sys.stdout.write(L.to_dot())
    elif args.format == "text":
        for u, v in L.edges:
            print(u, v)
    else:
        print(L.to_json())
    return EXIT_YES


def _check_result(parsed, args) -> CheckResult:
    D, side = parsed.digraph, parsed.bipartition
    if side is not None and args.policy in (None, "closed"):
        return check_bipartite(D, side)
    if side is None and args.policy in (None, "strict") and is_tournament(D) and D.n >= 1:
        if D.m % 2:
            quick = quick_tournament_certificate(D)
            cert = quick[0] if quick else OddArcCount(D.m)
            return CheckResult(False, P3Policy.STRICT, certificate=cert)
        try:
            return check_tournament(D, exhaustive=not args.no_certificate)
        except CertificateSearchExhausted:
            if not args.no_certificate:
                raise
            return result_of(D, decompose(D, P3Policy.STRICT), P3Policy.STRICT)
    policy = _policy(args)
    return result_of(D, decompose(D, policy), policy)


def cmd_check(args) -> int:
    res = _check_result(read_digraph(args.file), args)
    if args.format == "text":
        print("decomposable" if res.decomposable else "not decomposable")
        if res.decomposition is not None:
            for u, v, w in res.decomposition.triples:
                print(f"{u} -> {v} -> {w}")
        if res.certificate is not None:
            print(json.dumps(res.certificate.to_dict()))
    else:
        print(res.to_json())
    return EXIT_YES if res.decomposable else EXIT_NO


def cmd_decompose(args) -> int:
    D = read_digraph(args.file).digraph
    policy = _policy(args)
    res = result_of(D, decompose(D, policy), policy)
    print(res.to_json())
    return EXIT_YES if res.decomposable else EXIT_NO


def cmd_fractional(args) -> int:
    D = read_digraph(args.file).digraph
    policy = _policy(args)
    res = check_fractional(D, policy)
    _emit({**res.to_dict(), "policy": policy.value})
    return EXIT_YES if res.exists else EXIT_NO


def cmd_connectivity(args) -> int:
    D = read_digraph(args.file).digraph
    connected, agreement = line_graph_connected(D, _policy(args))
    _emit({"connected": connected, "agreement": agreement})
    return EXIT_YES if connected else EXIT_NO


def cmd_euler_ham(args) -> int:
    D = read_digraph(args.file).digraph
    policy = _policy(args)
    cycle = line_hamilton_cycle(D, policy)
    L = build_line_graph(D, policy)
    m = len(cycle)
    hl = {tuple(sorted((cycle[i], cycle[(i + 1) % m]))) for i in range(m)}
    dot = L.to_dot(highlight=hl)
    if args.format == "dot":
        sys.stdout.write(dot)
    else:
        _emit({"cycle": cycle, "policy": policy.value, "dot": dot})
    return EXIT_YES


def _oracle_instances(args):
    if args.family == "tournaments":
        if args.n is None:
            raise UsageError("tournaments needs --n")
        yield from ((D, {"mask": k}) for k, D in enumerate(oracle.tournaments(args.n)))
    elif args.family == "bipartite":
        if args.a is None or args.b is None:
            raise UsageError("bipartite needs --a and --b")
        yield from ((D, {"mask": k}) for k, D in
                    enumerate(oracle.bipartite_digraphs(args.a, args.b)))
    else:
        if args.seed is None or args.n is None:
            raise UsageError("random needs --n and --seed")
        p = 0.5 if args.p is None else args.p
        for k in range(args.count):
            seed = args.seed + k
            yield generators.random_strict_digraph(args.n, p, seed), {"seed": seed}


def cmd_oracle(args) -> int:
    all_ok = True
    for D, extra in _oracle_instances(args):
        if args.check == "tournament":
            if D.m % 2:
                continue
            rep = oracle.report_tournament(D, **extra)
        elif args.check == "fractional":
            rep = oracle.report_fractional(D, _policy(args), **extra)
        elif args.check == "bipartite":
            if args.family != "bipartite":
                raise UsageError("--check bipartite needs the bipartite family")
            rep = oracle.report_bipartite(D, range(args.a), **extra)
        else:
            rep = oracle.report_decompose(D, _policy(args), **extra)
        all_ok &= rep.agreement
        print(json.dumps(rep.to_dict()))
    return EXIT_YES if all_ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="p3decomp",
                                     description="Directed P3-decompositions of digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_policy(p):
        p.add_argument("--policy", choices=["strict", "closed"], default=None)

    g = sub.add_parser("gen", help="generate a digraph in the text format")
    g.add_argument("kind", choices=generators.KINDS)
    for flag, typ in (("--n", int), ("--m", int), ("--a", int), ("--b", int), ("--p", float)):
        g.add_argument(flag, type=typ)
    g.add_argument("--digons", action="store_true", help="allow opposite arc pairs")
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    lg = sub.add_parser("linegraph", help="emit L(D)")
    lg.add_argument("file")
    add_policy(lg)
    lg.add_argument("--format", choices=["json", "dot", "text"], default="json")
    lg.set_defaults(func=cmd_linegraph)

    c = sub.add_parser("check", help="decide decomposability with a certificate")
    c.add_argument("file")
    add_policy(c)
    c.add_argument("--no-certificate", action="store_true",
                   help="skip the exponential partition scan for tournaments")
    c.add_argument("--format", choices=["json", "text"], default="json")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("decompose", help="matching-based decomposition")
    d.add_argument("file")
    add_policy(d)
    d.set_defaults(func=cmd_decompose)

    f = sub.add_parser("fractional", help="fractional perfect matching of L(D)")
    f.add_argument("file")
    add_policy(f)
    f.set_defaults(func=cmd_fractional)

    cn = sub.add_parser("connectivity", help="is L(D) connected")
    cn.add_argument("file")
    add_policy(cn)
    cn.set_defaults(func=cmd_connectivity)

    e = sub.add_parser("euler-ham", help="Hamilton cycle of L(D) from an Euler tour")
    e.add_argument("file")
    add_policy(e)
    e.add_argument("--format", choices=["json", "dot"], default="json")
    e.set_defaults(func=cmd_euler_ham)

    o = sub.add_parser("oracle", help="engine vs brute force, as JSON lines")
    o.add_argument("family", choices=["tournaments", "bipartite", "random"])
    o.add_argument("--check", choices=["decompose", "tournament", "fractional", "bipartite"],
                   default="decompose")
    for flag, typ in (("--n", int), ("--a", int), ("--b", int), ("--p", float)):
        o.add_argument(flag, type=typ)
    o.add_argument("--count", type=int, default=100)
    o.add_argument("--seed", type=int)
    add_policy(o)
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_YES
    try:
        return args.func(args)
    except SearchExhausted as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (P3Error, UsageError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
