"""HTTP service exposing the homology computations.

The CLI talks to this app in-process; `h1graph serve` runs it standalone.
Error mapping: bad input 400, algorithm disagreement 409, internal
invariant breakage 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from ..bench import (
    ALG_ORDER,
    ALGORITHMS,
    Category,
    fastest_counts,
    format_detailed_csv,
    desk_categories,
    paper_categories,
    run_category,
)
from ..cellular import h1_cellular
from ..cycles import simple_four_cycles, triangles
from ..edgelist import format_edge_list, parse_edge_list
from ..errors import BenchDisagreementError, InputDomainError, InternalConsistencyError
from ..generators import GenSpec, named
from ..graph import Graph
from .models import (
    BenchRequest,
    BenchResponse,
    BenchRowModel,
    ComputeRequest,
    ComputeResponse,
    CyclesRequest,
    CyclesResponse,
    GraphSource,
)


def _resolve_graph(source: GraphSource) -> Graph:
    if source.edge_list_text is not None:
        return parse_edge_list(source.edge_list_text)
    spec = source.spec
    assert spec is not None  # enforced by the model validator
    return named(GenSpec(family=spec.family, params=spec.params, p=spec.p, seed=spec.seed))


def create_app() -> FastAPI:
    app = FastAPI(title="h1graph", version="0.1.0")

    @app.exception_handler(InputDomainError)
    async def _bad_input(request: Request, exc: InputDomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(BenchDisagreementError)
    async def _disagree(request: Request, exc: BenchDisagreementError) -> JSONResponse:
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.exception_handler(InternalConsistencyError)
    async def _broken(request: Request, exc: InternalConsistencyError) -> JSONResponse:
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/healthz")
    async def healthz() -> dict:
        return {"status": "ok"}

    @app.post("/graphs/compute", response_model=ComputeResponse)
    async def compute(req: ComputeRequest) -> ComputeResponse:
        g = _resolve_graph(req.graph)
        dims = {}
        for alg in ALG_ORDER:
            if alg not in req.algorithms:
                continue
            if alg == "cellular":
                dims[alg] = h1_cellular(g, threads=req.threads)
            else:
                dims[alg] = ALGORITHMS[alg](g)
        agree = len(set(dims.values())) <= 1
        return ComputeResponse(n=g.n, m=g.m, dims=dims, agree=agree)

    @app.post("/graphs/cycles", response_model=CyclesResponse)
    async def cycles(req: CyclesRequest) -> CyclesResponse:
        g = _resolve_graph(req.graph)
        tris = triangles(g)
        quads = simple_four_cycles(g, chordless=req.chordless, threads=req.threads)
        return CyclesResponse(n=g.n, m=g.m, triangles=len(tris), four_cycles=len(quads))

    @app.post("/graphs/generate", response_class=PlainTextResponse)
    async def generate(source: GraphSource) -> str:
        if source.spec is None:
            raise InputDomainError("generate requires a spec, not edge_list_text")
        return format_edge_list(_resolve_graph(source))

    @app.post("/bench/run", response_model=BenchResponse)
    async def bench(req: BenchRequest) -> BenchResponse:
        if req.categories is not None:
            cats = [
                Category(
                    id=c.id,
                    n_rule=c.n[0] if c.n[0] == c.n[1] else (c.n[0], c.n[1]),
                    p_rule=c.p[0] if c.p[0] == c.p[1] else (c.p[0], c.p[1]),
                    count=c.count,
                    seed=c.seed if c.seed is not None else req.seed + c.id,
                )
                for c in req.categories
            ]
        elif req.scale == "paper":
            cats = paper_categories(req.seed)
        else:
            cats = desk_categories(req.seed)
        rows = []
        for cat in cats:
            rows.extend(run_category(cat, repeats=req.repeats))
        return BenchResponse(
            csv=format_detailed_csv(rows),
            rows=[
                BenchRowModel(
                    graph_name=r.graph_name,
                    n=r.n,
                    p=r.p,
                    num_3_cycles=r.tri_count,
                    num_4_cycles=r.quad_count,
                    total_cycles=r.cell_total,
                    h1_dim=r.h1_dim,
                    cellular_time=r.t_cellular,
                    edge_graph_time=r.t_edgegraph,
                    cubical_time=r.t_cubical,
                    fastest=r.fastest,
                )
                for r in rows
            ],
            fastest_counts=fastest_counts(rows),
        )

    return app
