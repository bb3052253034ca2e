"""Wire schema of a graph document.

These models mirror the JSON input one-to-one. Every weight is optional
and references are plain integers; the loader resolves defaults, checks
references and turns a document into a `ZappaticGraph`.
"""

from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, StrictInt

from zappatic.graph.schema import GraphMode, PointKind

# JSON booleans and integral floats are not integers here.
WireInt = StrictInt
WireCount = Annotated[StrictInt, Field(ge=0)]
WirePositive = Annotated[StrictInt, Field(gt=0)]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class VertexDocument(_Document):
    chi: Optional[WireInt] = None
    k2: Optional[WireInt] = None
    pg: Optional[WireCount] = None
    q: Optional[WireCount] = None
    sectional_genus: Optional[WireCount] = None
    degree: Optional[WirePositive] = None


class EdgeDocument(_Document):
    u: WireCount
    v: WireCount
    genus: Optional[WireCount] = None
    degree: Optional[WirePositive] = None
    self_int_u: Optional[WireInt] = None
    self_int_v: Optional[WireInt] = None
    normal_deg_u: Optional[WireInt] = None
    normal_deg_v: Optional[WireInt] = None


class PointDocument(_Document):
    kind: PointKind
    edges: list[WireCount] = Field(min_length=1)


class GraphDocument(_Document):
    mode: GraphMode
    vertices: list[VertexDocument] = Field(min_length=1)
    edges: list[EdgeDocument] = []
    points: list[PointDocument] = []
