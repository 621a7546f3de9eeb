"""JSON records and plain-text formats for poses and embeddings."""

from __future__ import annotations

from typing import List, Optional, Sequence

import msgspec

from .canonical import CanonicalEmbedding
from .embed import LatticeEmbedding
from .pose import AxialPose
from .quaternion import Quat
from .simplex import format_permutation

Vector = List[int]


class PoseRecord(msgspec.Struct):
    edges: Vector
    permutation: str
    vertices: List[Vector]

    @classmethod
    def from_pose(cls, pose: AxialPose) -> "PoseRecord":
        return cls(
            edges=list(pose.edges.edges),
            permutation=format_permutation(pose.permutation),
            vertices=[list(v) for v in pose.vertices],
        )

    def to_json(self) -> str:
        return msgspec.json.encode(self).decode("utf-8")


class EmbeddingRecord(msgspec.Struct):
    edges: Vector
    vertices: List[Vector]
    strength: str = "none"
    permutation: Optional[str] = None
    rotors: List[Vector] = msgspec.field(default_factory=list)
    labels: Optional[str] = None

    @classmethod
    def from_embedding(cls, e: LatticeEmbedding) -> "EmbeddingRecord":
        return cls(
            edges=list(e.source.edges),
            vertices=[list(v) for v in e.vertices],
            permutation=format_permutation(e.permutation),
            rotors=[list(x) for x in e.rotors],
        )

    @classmethod
    def from_canonical(
        cls, form: CanonicalEmbedding, edges: Sequence[int]
    ) -> "EmbeddingRecord":
        return cls(
            edges=list(edges),
            vertices=[list(v) for v in form.to_quats()],
            strength=form.strength,
            labels=None if form.labels is None else format_permutation(form.labels),
        )

    @classmethod
    def from_json(cls, text: str | bytes) -> "EmbeddingRecord":
        return msgspec.json.decode(text, type=cls)

    def to_json(self) -> str:
        return msgspec.json.encode(self).decode("utf-8")


class SearchRecord(msgspec.Struct):
    edges: Vector
    strength: str
    embeddings: List[List[Vector]]

    def to_json(self) -> str:
        return msgspec.json.encode(self).decode("utf-8")


def parse_vertex_line(line: str) -> Quat:
    """Parse ``[1,396,864,432]`` (brackets optional) into a quaternion."""
    cleaned = line.strip().strip("[]").replace(",", " ")
    try:
        values = [int(tok) for tok in cleaned.split()]
    except ValueError as exc:
        raise ValueError(f"invalid vertex line {line!r}") from exc
    if len(values) == 3:
        values = [1, *values]
    if len(values) != 4:
        raise ValueError(f"vertex line needs 3 or 4 integers: {line!r}")
    return Quat.of(values)


def parse_vertices(text: str) -> tuple[Quat, ...]:
    """Parse one vertex per non-empty line; ``#`` starts a comment."""
    lines = (line.split("#", 1)[0] for line in text.splitlines())
    return tuple(parse_vertex_line(line) for line in lines if line.strip())
