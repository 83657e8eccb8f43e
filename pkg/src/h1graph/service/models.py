"""Request and response schemas for the HTTP service."""

from __future__ import annotations

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

AlgName = Literal["cellular", "edge_graph", "cubical"]


class GenSpecModel(BaseModel):
    """A named graph family, mirrored from the generator layer.

    `params` are the integer shape parameters (cycle length, grid sides,
    hypercube dimension, ER vertex count); `p` only applies to `er`.
    """

    family: str
    params: Tuple[int, ...] = ()
    p: Optional[float] = None
    seed: int = 0


class GraphSource(BaseModel):
    """Exactly one of `edge_list_text` or `spec` must be given."""

    edge_list_text: Optional[str] = None
    spec: Optional[GenSpecModel] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "GraphSource":
        if (self.edge_list_text is None) == (self.spec is None):
            raise ValueError("provide exactly one of edge_list_text or spec")
        return self


class ComputeRequest(BaseModel):
    graph: GraphSource
    algorithms: List[AlgName] = Field(default_factory=lambda: ["cellular"])
    threads: int = 1


class ComputeResponse(BaseModel):
    n: int
    m: int
    dims: Dict[str, int]
    agree: bool


class CyclesRequest(BaseModel):
    graph: GraphSource
    chordless: bool = True
    threads: int = 1


class CyclesResponse(BaseModel):
    n: int
    m: int
    triangles: int
    four_cycles: int


class CategoryModel(BaseModel):
    id: int
    count: int = Field(ge=0)
    n: Tuple[int, int]  # lo == hi means fixed
    p: Tuple[float, float]
    seed: Optional[int] = None  # default: run seed + id


class BenchRequest(BaseModel):
    scale: Literal["desk", "paper"] = "desk"
    seed: int = 2024
    repeats: int = Field(default=3, ge=1)
    categories: Optional[List[CategoryModel]] = None


class BenchRowModel(BaseModel):
    graph_name: str
    n: int
    p: float
    num_3_cycles: int
    num_4_cycles: int
    total_cycles: int
    h1_dim: int
    cellular_time: float
    edge_graph_time: float
    cubical_time: float
    fastest: str


class BenchResponse(BaseModel):
    csv: str
    rows: List[BenchRowModel]
    fastest_counts: Dict[str, int]
