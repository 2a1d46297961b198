"""Command-line entry point: ``cq``.

Subcommands: quiver, mutate, clusters, grcount, qchar, decomp, verify, serve.
Outputs are deterministic given the argv and the ``--seed`` root; ``--json``
switches to machine-readable output.  Exit codes: 0 success, 1 suite failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path
from typing import Sequence

from .cluster import Seed, enumerate_clusters, principal_seed
from .graphs import (Bipartite, OddCycleError, builtin_graph,
                     graph_from_dict)
from .grassmann import count_table, default_primes, degree_bound_for, \
    interpolate_integer_polynomial
from .quiver import QuiverError
from .replab import GradedDim, as_rng, canonical_decomposition, child_rng, \
    is_real_schur, is_schur_root
from .qchar import truncated_character
from .verify import (Report, verify_common_cluster, verify_hl_correspondence,
                     verify_odd_vanishing, verify_t_system)

BUILTINS = "a1 a2 a3 a4 d4 d5 e6 kronecker".split()


class UsageError(Exception):
    pass


def _setting(args) -> Bipartite:
    if getattr(args, "graph_file", None):
        data = json.loads(Path(args.graph_file).read_text())
        graph = graph_from_dict(data)
        parts = data.get("parts")
    elif args.graph:
        graph = builtin_graph(args.graph)
        parts = None
    else:
        raise UsageError("one of --graph or --graph-file is required")
    if getattr(args, "parts", None):
        i0 = [v.strip() for v in args.parts.split(",") if v.strip()]
        i1 = [v for v in graph.vertices if v not in i0]
        return Bipartite(graph, (i0, i1))
    if isinstance(parts, list) and parts and parts[0]:
        i0 = [str(v) for v in parts[0]]
        i1 = [v for v in graph.vertices if v not in i0]
        return Bipartite(graph, (i0, i1))
    return Bipartite(graph)


def _parse_w(setting: Bipartite, spec: str) -> GradedDim:
    """--w tokens: "i:n" puts n on both slots of i (a KR pair);
    "i:a:b" puts (principal, frozen) = (a, b)."""
    pairs: dict[str, tuple[int, int]] = {}
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        bits = token.split(":")
        if len(bits) == 2:
            v, n = bits[0], int(bits[1])
            pairs[v] = (n, n)
        elif len(bits) == 3:
            pairs[v_ := bits[0]] = (int(bits[1]), int(bits[2]))
        else:
            raise UsageError(f"bad --w token {token!r}")
    for v in pairs:
        if v not in setting.graph.vertices:
            raise UsageError(f"--w names unknown vertex {v!r}")
    return GradedDim.from_w_slots(setting, pairs)


def _parse_dimvec(setting: Bipartite, spec: str) -> dict[str, int]:
    values = [int(x) for x in spec.split(",")]
    verts = setting.vertices()
    if len(values) != len(verts):
        raise UsageError(f"expected {len(verts)} entries for vertices {verts}")
    return dict(zip(verts, values))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- subcommands ------------------------------------------------------------------


def cmd_quiver(args) -> int:
    setting = _setting(args)
    kinds = {
        "decorated": setting.decorated,
        "x": setting.x_quiver,
        "z": setting.z_quiver,
        "principal-decorated": setting.principal_decorated,
        "z-principal": setting.z_principal,
        "x-principal": setting.x_principal,
    }
    q = kinds[args.kind]()
    text = [f"{args.kind} quiver  (I0 = {sorted(setting.i0)}, "
            f"I1 = {sorted(setting.i1)})"]
    text += [f"  {s} -> {t}" for s, t in q.arrows]
    _emit(args, q.to_dict(), "\n".join(text))
    return 0


def cmd_mutate(args) -> int:
    if args.seed:
        seed = Seed.from_dict(json.loads(Path(args.seed).read_text()))
    else:
        setting = _setting(args)
        seed = Seed.initial(setting.x_quiver())
    for k in args.at or []:
        seed = seed.mutate(k)
    payload = seed.to_dict()
    text = "\n".join(f"{v} = {seed.pretty(v)}" for v in seed.matrix.principal)
    _emit(args, payload, text)
    return 0


def cmd_clusters(args) -> int:
    setting = _setting(args)
    if args.coeff == "x":
        seed = Seed.initial(setting.x_quiver())
    elif args.coeff == "z":
        seed = Seed.initial(setting.z_quiver())
    elif args.coeff == "none":
        seed = Seed.initial(setting.x_principal())
    elif args.coeff == "principal":
        seed = principal_seed(setting.z_principal())
    else:
        raise UsageError(f"unknown --coeff {args.coeff!r}")
    census = enumerate_clusters(seed, args.max_seeds)
    payload = {
        "closed": census.closed,
        "clusters": [list(c) for c in census.clusters],
        "variables": sorted(census.variables),
        "seeds": len(census.seeds),
    }
    text = (f"clusters: {census.cluster_count()}   cluster variables: "
            f"{census.variable_count()}   seeds explored: {len(census.seeds)}   "
            f"closed: {census.closed}")
    _emit(args, payload, text)
    return 0


def cmd_grcount(args) -> int:
    setting = _setting(args)
    quiver = setting.z_principal()
    d = _parse_dimvec(setting, args.d)
    verts = setting.vertices()
    if args.v:
        v_list = [_parse_dimvec(setting, args.v)]
    else:
        v_list = [dict(zip(verts, combo)) for combo in
                  itertools.product(*[range(d[v] + 1) for v in verts])]
    bound_max = max(degree_bound_for(d, v) for v in v_list)
    primes = tuple(int(p) for p in args.primes.split(",")) if args.primes \
        else default_primes(bound_max)
    rng = as_rng(args.rng_seed)
    table = count_table(quiver, d, v_list, primes, rng)
    rows = []
    interpolants = {}
    for v in v_list:
        key = tuple(v[x] for x in quiver.vertex_ids())
        points = sorted(table[key].items())
        for p, c in points:
            rows.append({"v": [v[x] for x in verts], "prime": p, "count": c})
        coeffs = interpolate_integer_polynomial(points, degree_bound_for(d, v))
        vname = ",".join(str(v[x]) for x in verts)
        interpolants[vname] = coeffs
    payload = {"d": [d[x] for x in verts], "rows": rows,
               "interpolants": interpolants}
    lines = ["v\tprime\tcount"]
    lines += [f"{','.join(map(str, r['v']))}\t{r['prime']}\t{r['count']}"
              for r in rows]
    lines.append("")
    for vname, coeffs in interpolants.items():
        poly = "NON-POLYNOMIAL" if coeffs is None else \
            (" + ".join(f"{c}*q^{k}" for k, c in enumerate(coeffs) if c)
             or "0")
        lines.append(f"count(v={vname}) = {poly}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_qchar(args) -> int:
    from .qchar import pretty_character

    setting = _setting(args)
    w = _parse_w(setting, args.w)
    chi = truncated_character(setting, w, args.t_mode, rng=as_rng(args.rng_seed))
    payload = {"w": w.to_dict(), "character": str(chi),
               "pretty": pretty_character(chi), "terms": chi.to_terms()}
    _emit(args, payload, pretty_character(chi) if args.pretty else str(chi))
    return 0


def cmd_decomp(args) -> int:
    setting = _setting(args)
    quiver = setting.z_principal()
    d = _parse_dimvec(setting, args.d)
    rng = as_rng(args.rng_seed)
    factors = canonical_decomposition(quiver, d, args.p, args.samples,
                                      child_rng(rng, 1))
    verts = setting.vertices()
    described = []
    for i, f in enumerate(factors):
        described.append({
            "dims": [f[x] for x in verts],
            "schur": is_schur_root(quiver, f, args.p, rng=child_rng(rng, 2, i)),
            "real": is_real_schur(quiver, f, args.p, rng=child_rng(rng, 3, i)),
        })
    payload = {"d": [d[x] for x in verts], "factors": described}
    lines = [f"canonical decomposition of ({', '.join(map(str, payload['d']))}):"]
    for f in described:
        tag = "real Schur" if f["real"] else ("Schur" if f["schur"] else "?")
        lines.append(f"  ({', '.join(map(str, f['dims']))})   [{tag}]")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    setting = _setting(args)
    reports: list[Report] = []
    suite = args.suite
    if suite in ("t-system", "all"):
        reports.append(verify_t_system(setting, args.rng_seed))
    if suite in ("hl", "all"):
        reports.append(verify_hl_correspondence(setting, args.max_seeds,
                                                args.rng_seed))
    if suite in ("common-cluster", "all"):
        reports.append(verify_common_cluster(setting, seed=args.rng_seed,
                                             max_seeds=args.max_seeds))
    if suite in ("odd-vanishing", "all"):
        reports.append(verify_odd_vanishing(setting, args.dims,
                                            seed=args.rng_seed))
    if not reports:
        raise UsageError(f"unknown suite {suite!r}")
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2,
                         sort_keys=True))
    else:
        for r in reports:
            print(r.format_table())
            print()
    return 0 if all(r.passed() for r in reports) else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    app = create_app(state_dir=args.state_dir, rng_seed=args.rng_seed)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cq",
        description="cluster mutation, quiver Grassmannian counts, and "
                    "truncated q-characters")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rng=True):
        p.add_argument("--graph", choices=BUILTINS, help="built-in graph")
        p.add_argument("--graph-file", help="JSON graph {vertices, edges[, parts]}")
        p.add_argument("--parts", help="comma-separated I0 vertex list")
        p.add_argument("--json", action="store_true", help="machine output")
        if rng:
            p.add_argument("--seed", dest="rng_seed", type=int, default=0,
                           help="root rng seed")

    p = sub.add_parser("quiver", help="print a derived quiver")
    common(p)
    p.add_argument("--kind", default="x",
                   choices=["decorated", "x", "z", "principal-decorated",
                            "z-principal", "x-principal"])
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("mutate", help="mutate a seed")
    p.add_argument("--seed", help="seed JSON file (omit to start from the "
                                  "x-quiver initial seed of --graph)")
    p.add_argument("--graph", choices=BUILTINS)
    p.add_argument("--graph-file")
    p.add_argument("--parts")
    p.add_argument("--at", action="append", help="vertex to mutate (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("clusters", help="enumerate the mutation closure")
    common(p)
    p.add_argument("--coeff", default="x",
                   choices=["x", "z", "none", "principal"])
    p.add_argument("--max-seeds", type=int, default=1000)
    p.set_defaults(func=cmd_clusters)

    p = sub.add_parser("grcount", help="quiver Grassmannian point counts")
    common(p)
    p.add_argument("--d", required=True, help="module dims, comma-separated")
    p.add_argument("--v", help="subdims (omit to sweep all)")
    p.add_argument("--primes", help="comma-separated primes")
    p.set_defaults(func=cmd_grcount)

    p = sub.add_parser("qchar", help="truncated q-character")
    common(p)
    p.add_argument("--w", required=True,
                   help='weight, e.g. "1:1" (KR pair) or "1:1:0,2:0:1"')
    p.add_argument("--t-mode", default="t", choices=["t", "one"])
    p.add_argument("--pretty", action="store_true",
                   help="spectral-parameter shorthand Y_{i,q^n}")
    p.set_defaults(func=cmd_qchar)

    p = sub.add_parser("decomp", help="canonical decomposition of a dim vector")
    common(p)
    p.add_argument("--d", required=True)
    p.add_argument("--p", type=int, default=101)
    p.add_argument("--samples", type=int, default=7)
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["t-system", "hl", "common-cluster",
                                     "odd-vanishing", "all"])
    common(p)
    p.add_argument("--max-seeds", type=int, default=600)
    p.add_argument("--dims", type=int, default=1,
                   help="per-vertex budget for odd-vanishing")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the exploration HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8472)
    p.add_argument("--state-dir", help="snapshot sessions as JSON here")
    p.add_argument("--seed", dest="rng_seed", type=int, default=0)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (QuiverError, OddCycleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
