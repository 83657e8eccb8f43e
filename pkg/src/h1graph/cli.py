"""Command-line entry point.

Every subcommand except `serve` is a thin client of the HTTP service: by
default the app is driven in-process (no server needed), `--server URL`
targets a running one instead.  Exit codes: 0 ok, 1 algorithm
disagreement, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from typing import Any, Dict, List, Optional, Tuple

import httpx

CLI_ALGS = ("cellular", "edgegraph", "cubical")
_CLI_TO_INTERNAL = {"cellular": "cellular", "edgegraph": "edge_graph", "cubical": "cubical"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="h1graph",
        description="First homology of simple graphs over GF(2), three ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--file", help="edge-list file (header 'n m', then one edge per line)")
        p.add_argument(
            "--family",
            help="named family: erdos_renyi, cycle, path, complete, hypercube, grid, petersen, box_product",
        )
        p.add_argument(
            "--param",
            type=int,
            action="append",
            default=None,
            help="integer family parameter; repeat for multi-parameter families",
        )
        p.add_argument("--p", type=float, default=None, help="edge probability (erdos_renyi)")
        p.add_argument("--seed", type=int, default=0, help="generator seed")

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--server", default=None, help="base URL of a running service; default is in-process")
        p.add_argument("--threads", type=int, default=1, help="worker cap for enumeration; 0 = auto")

    p_compute = sub.add_parser("compute", help="compute dim H1 of a graph")
    add_graph_source(p_compute)
    add_common(p_compute)
    p_compute.add_argument(
        "--alg",
        choices=CLI_ALGS + ("all",),
        default="cellular",
        help="which algorithm(s) to run",
    )

    p_gen = sub.add_parser("gen", help="generate a graph and write its edge list")
    add_graph_source(p_gen)
    add_common(p_gen)
    p_gen.add_argument("--out", default=None, help="output path; default stdout")

    p_cycles = sub.add_parser("cycles", help="count simple 3-cycles and 4-cycles")
    add_graph_source(p_cycles)
    add_common(p_cycles)
    p_cycles.add_argument(
        "--chordless",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="count only chordless 4-cycles (default) or all simple ones",
    )

    p_bench = sub.add_parser("bench", help="run the benchmark and write the CSV")
    add_common(p_bench)
    p_bench.add_argument("--scale", choices=("desk", "paper"), default="desk")
    p_bench.add_argument("--seed", type=int, default=2024)
    p_bench.add_argument("--repeats", type=int, default=None, help="timed runs per graph (default 3)")
    p_bench.add_argument("--config", default=None, help="key=value category config file")
    p_bench.add_argument("--out", default="detailed_results.csv", help="CSV output path")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _graph_source(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Dict[str, Any]:
    if (args.file is None) == (args.family is None):
        parser.error("provide exactly one of --file or --family")
    if args.file is not None:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                return {"edge_list_text": fh.read()}
        except OSError as exc:
            parser.error(f"cannot read {args.file}: {exc.strerror or exc}")
    spec: Dict[str, Any] = {"family": args.family, "seed": args.seed}
    if args.param:
        spec["params"] = args.param
    if args.p is not None:
        spec["p"] = args.p
    return {"spec": spec}


async def _post(server: Optional[str], path: str, payload: Dict[str, Any]) -> httpx.Response:
    if server is not None:
        async with httpx.AsyncClient(base_url=server, timeout=None) as client:
            return await client.post(path, json=payload)
    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(transport=transport, base_url="http://h1graph.local", timeout=None) as client:
        return await client.post(path, json=payload)


def _call(server: Optional[str], path: str, payload: Dict[str, Any]) -> Tuple[int, httpx.Response]:
    """POST and map HTTP status to a CLI exit code (0 ok, 1 conflict, 2 else)."""
    try:
        resp = asyncio.run(_post(server, path, payload))
    except httpx.HTTPError as exc:
        print(f"error: cannot reach {server}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    if resp.status_code == 409:
        return 1, resp
    if resp.status_code >= 300:
        return 2, resp
    return 0, resp


def _detail(resp: httpx.Response) -> str:
    try:
        return str(resp.json().get("detail"))
    except ValueError:
        return resp.text


def _cmd_compute(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    algs = list(CLI_ALGS) if args.alg == "all" else [args.alg]
    payload = {
        "graph": _graph_source(args, parser),
        "algorithms": [_CLI_TO_INTERNAL[a] for a in algs],
        "threads": args.threads,
    }
    code, resp = _call(args.server, "/graphs/compute", payload)
    if code:
        print(f"error: {_detail(resp)}", file=sys.stderr)
        return code
    body = resp.json()
    for alg in algs:
        print(f"H1 dim = {body['dims'][_CLI_TO_INTERNAL[alg]]}")
    if not body["agree"]:
        print("error: algorithms disagree", file=sys.stderr)
        return 1
    return 0


def _cmd_gen(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    source = _graph_source(args, parser)
    if "spec" not in source:
        parser.error("gen requires --family, not --file")
    code, resp = _call(args.server, "/graphs/generate", source)
    if code:
        print(f"error: {_detail(resp)}", file=sys.stderr)
        return code
    if args.out is None:
        sys.stdout.write(resp.text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(resp.text)
    return 0


def _cmd_cycles(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    payload = {
        "graph": _graph_source(args, parser),
        "chordless": args.chordless,
        "threads": args.threads,
    }
    code, resp = _call(args.server, "/graphs/cycles", payload)
    if code:
        print(f"error: {_detail(resp)}", file=sys.stderr)
        return code
    body = resp.json()
    print(f"triangles={body['triangles']} four_cycles={body['four_cycles']}")
    return 0


def _categories_payload(path: str) -> Tuple[List[Dict[str, Any]], int, int]:
    from .bench import load_bench_config

    cats, repeats, seed = load_bench_config(path)
    models = []
    for c in cats:
        n = c.n_rule if isinstance(c.n_rule, tuple) else (c.n_rule, c.n_rule)
        p = c.p_rule if isinstance(c.p_rule, tuple) else (c.p_rule, c.p_rule)
        models.append({"id": c.id, "count": c.count, "n": n, "p": p, "seed": c.seed})
    return models, repeats, seed


def _cmd_bench(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    payload: Dict[str, Any] = {"scale": args.scale, "seed": args.seed}
    if args.config is not None:
        try:
            cats, repeats, seed = _categories_payload(args.config)
        except Exception as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        payload["categories"] = cats
        payload["seed"] = seed
        payload["repeats"] = repeats
    if args.repeats is not None:
        payload["repeats"] = args.repeats
    code, resp = _call(args.server, "/bench/run", payload)
    if code:
        print(f"error: {_detail(resp)}", file=sys.stderr)
        return code
    body = resp.json()
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(body["csv"])
    counts = body["fastest_counts"]
    summary = " ".join(f"{alg}={counts.get(alg, 0)}" for alg in ("cellular", "edge_graph", "cubical"))
    print(f"wrote {args.out} ({len(body['rows'])} graphs); fastest: {summary}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return _cmd_compute(args, parser)
    if args.command == "gen":
        return _cmd_gen(args, parser)
    if args.command == "cycles":
        return _cmd_cycles(args, parser)
    if args.command == "bench":
        return _cmd_bench(args, parser)
    if args.command == "serve":
        return _cmd_serve(args)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
