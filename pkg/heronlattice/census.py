"""Enumeration of Heronian triangles and tetrahedra by diameter."""

from __future__ import annotations

import logging
import math
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from collections import defaultdict
from pathlib import Path
from typing import Iterator, Literal

import tomli_w
from filelock import FileLock, Timeout

from .exact import int_sqrt
from .simplex import EdgeHexad, EdgeTriple, canonical_hexad, tetrahedron_volume

logger = logging.getLogger(__name__)

Kind = Literal["triangle", "tetra"]


class CheckpointLockError(Exception):
    """Raised when another enumeration holds the checkpoint lock."""


def _heronian_triangles_with_diameter(c: int) -> list[EdgeTriple]:
    found = []
    for b in range(1, c + 1):
        for a in range(c - b + 1, b + 1):
            # an odd perimeter leaves (4d)**2 congruent to 3 mod 4
            if (a + b + c) % 2:
                continue
            product = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c)
            if product > 0 and int_sqrt(product) is not None:
                found.append(EdgeTriple((c, b, a)))
    return sorted(found)


def _triangles_by_diameter(start: int, stop: int) -> Iterator[tuple[int, list[EdgeTriple]]]:
    for c in range(max(1, start), stop + 1):
        yield c, _heronian_triangles_with_diameter(c)


class _FaceTable:
    """Heronian proper triangles indexed by pairs of edges."""

    def __init__(self) -> None:
        self.third: dict[int, dict[int, set[int]]] = defaultdict(lambda: defaultdict(set))

    def add(self, t: EdgeTriple) -> None:
        a, b, c = t.edges
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            self.third[x][y].add(z)
            self.third[y][x].add(z)

    def partners(self, a: int, b: int) -> set[int]:
        inner = self.third.get(a)
        if inner is None:
            return set()
        return inner.get(b, set())


def _tetrahedra_with_diameter(u: int, faces: _FaceTable) -> list[EdgeHexad]:
    found: set[EdgeHexad] = set()
    around = {v: {w for w in ws if w <= u} for v, ws in faces.third.get(u, {}).items() if v <= u}
    wedges = [(v, w) for v, ws in around.items() for w in ws]
    for v, w in wedges:
        for x, y in wedges:
            for z in faces.partners(v, x) & faces.partners(w, y):
                if z > u:
                    continue
                hexad = EdgeHexad((u, v, w, x, y, z))
                volume = tetrahedron_volume(hexad)
                if volume is not None and volume > 0:
                    found.add(canonical_hexad(hexad)[0])
    return sorted(found, reverse=True)


def enumerate_heronian(
    kind: Kind,
    max_diameter: int,
    primitive_only: bool = True,
    start_diameter: int = 1,
) -> Iterator[EdgeTriple | EdgeHexad]:
    """Yield proper Heronian simplices in canonical form, ordered by diameter.

    Within one diameter, cases come in descending lexicographic order of their
    canonical edge lists.
    """
    for _, batch in _batches(kind, max_diameter, primitive_only, start_diameter):
        yield from batch


def _batches(
    kind: Kind, max_diameter: int, primitive_only: bool, start_diameter: int
) -> Iterator[tuple[int, list]]:
    if kind not in ("triangle", "tetra"):
        raise ValueError(f"kind must be 'triangle' or 'tetra', got {kind!r}")
    faces = _FaceTable()
    # tetrahedra need every face up to the current diameter, so the table
    # always starts from 1
    first = 1 if kind == "tetra" else start_diameter
    for c, triangles in _triangles_by_diameter(first, max_diameter):
        if kind == "triangle":
            batch = sorted(triangles, reverse=True)
        else:
            for t in triangles:
                faces.add(t)
            if c < start_diameter:
                continue
            batch = _tetrahedra_with_diameter(c, faces)
        if primitive_only:
            batch = [case for case in batch if math.gcd(*case.edges) == 1]
        if batch:
            logger.debug("diameter %d: %d %s case(s)", c, len(batch), kind)
        yield c, batch


def _acquire_lock(checkpoint: Path) -> FileLock:
    lock = FileLock(checkpoint.with_name(checkpoint.name + ".lock"))
    try:
        lock.acquire(timeout=0)
    except Timeout as exc:
        raise CheckpointLockError(
            f"Another enumeration appears to be running; lock exists for {checkpoint}"
        ) from exc
    return lock


def read_checkpoint(path: Path) -> dict | None:
    if not path.exists():
        return None
    return tomllib.loads(path.read_text(encoding="utf-8"))


def _write_checkpoint(path: Path, state: dict) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(tomli_w.dumps(state), encoding="utf-8")
    tmp.replace(path)


def run_census(
    kind: Kind,
    max_diameter: int,
    primitive_only: bool = True,
    checkpoint: Path | None = None,
) -> Iterator[EdgeTriple | EdgeHexad]:
    """Enumerate like :func:`enumerate_heronian`, resuming from ``checkpoint``.

    After each completed diameter the checkpoint records the diameter and the
    last case emitted. A checkpoint written for different arguments is
    ignored and overwritten.
    """
    if checkpoint is None:
        yield from enumerate_heronian(kind, max_diameter, primitive_only)
        return
    checkpoint = Path(checkpoint)
    lock = _acquire_lock(checkpoint)
    try:
        state = read_checkpoint(checkpoint) or {}
        same_run = (
            state.get("kind") == kind
            and state.get("primitive") == primitive_only
            and state.get("max_diameter") == max_diameter
        )
        start = int(state.get("completed_diameter", 0)) + 1 if same_run else 1
        last = list(state.get("last", [])) if same_run else []
        if start > 1:
            logger.info("resuming %s census after diameter %d", kind, start - 1)
        for diameter, batch in _batches(kind, max_diameter, primitive_only, start):
            yield from batch
            if batch:
                last = list(batch[-1].edges)
            _write_checkpoint(
                checkpoint,
                {
                    "kind": kind,
                    "max_diameter": max_diameter,
                    "primitive": primitive_only,
                    "completed_diameter": diameter,
                    "last": last,
                },
            )
    finally:
        lock.release()
