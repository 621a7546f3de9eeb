"""Command-line interface for heronlattice."""

from __future__ import annotations

import argparse
import itertools
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

from .canonical import CanonicalEmbedding, canonical_points, strong_canonical, weak_canonical
from .census import CheckpointLockError, run_census
from .config import ConfigValidationError, Settings, load_settings
from .embed import (
    LatticeEmbedding,
    embed_tetra_z3,
    embed_triangle_via_z3,
    embed_triangle_z2,
    gcd_embedding_family,
    verify_embedding,
)
from .errors import DomainError
from .pose import axial_pose, axial_pose_triangle
from .records import EmbeddingRecord, PoseRecord, SearchRecord, parse_vertices
from .search import (
    BudgetExhausted,
    PentatopeSpec,
    exhaustive_embeddings,
    exhaustive_triangle_embeddings,
    search_z4,
    solve_three_squares,
)
from .simplex import EdgeHexad, EdgeTriple, parse_permutation

logger = logging.getLogger("heronlattice")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _edges(text: str) -> EdgeTriple | EdgeHexad:
    cleaned = text.replace(",", " ").split()
    if len(cleaned) == 3:
        return EdgeTriple.parse(text)
    return EdgeHexad.parse(text)


def _squared_edges(text: str) -> PentatopeSpec:
    return PentatopeSpec(tuple(int(tok) for tok in text.replace(",", " ").split()))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {text}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(f"expected a non-negative integer, got {text}")
    return value


_edges.__name__ = "edge list"
_squared_edges.__name__ = "squared edge list"
_positive_int.__name__ = "positive integer"
_non_negative_int.__name__ = "non-negative integer"


def _permutation(args: argparse.Namespace, n: int):
    if not getattr(args, "perm", None):
        return None
    try:
        return parse_permutation(args.perm, n)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


class _UsageError(Exception):
    pass


def _require(edges, kind: type, command: str):
    if not isinstance(edges, kind):
        noun = "three" if kind is EdgeTriple else "six"
        raise _UsageError(f"{command} needs {noun} edge lengths, got {edges}")
    return edges


def _print_forms(forms: Sequence[CanonicalEmbedding], edges, args) -> None:
    if args.format == "records":
        for form in forms:
            print(EmbeddingRecord.from_canonical(form, edges.edges).to_json())
        return
    print(f"# {len(forms)} {args.strength} form(s)")
    for index, form in enumerate(forms):
        if index:
            print()
        if form.labels is not None:
            print("# labels " + "".join("PQRST"[i] for i in form.labels))
        print("\n".join(form.to_lines()))


def _print_embedding(embedding: LatticeEmbedding, canon: str, args) -> None:
    if canon != "none":
        form = weak_canonical(embedding) if canon == "weak" else strong_canonical(embedding)
        if args.format == "records":
            print(EmbeddingRecord.from_canonical(form, embedding.source.edges).to_json())
        else:
            print("\n".join(form.to_lines()))
        return
    if args.format == "records":
        print(EmbeddingRecord.from_embedding(embedding).to_json())
    else:
        print(embedding.to_text())


def cmd_pose(args: argparse.Namespace, settings: Settings) -> int:
    if isinstance(args.edges, EdgeTriple):
        pose = axial_pose_triangle(args.edges, _permutation(args, 3))
    else:
        pose = axial_pose(args.edges, _permutation(args, 4))
    if args.format == "records":
        print(PoseRecord.from_pose(pose).to_json())
    else:
        print(pose.to_text())
    return EXIT_OK


def cmd_embed2(args: argparse.Namespace, settings: Settings) -> int:
    t = _require(args.edges, EdgeTriple, "embed2")
    method = embed_triangle_via_z3 if args.via == "z3" else embed_triangle_z2
    _print_embedding(method(t, _permutation(args, 3)), args.canon, args)
    return EXIT_OK


def cmd_embed3(args: argparse.Namespace, settings: Settings) -> int:
    h = _require(args.edges, EdgeHexad, "embed3")
    _print_embedding(embed_tetra_z3(h, _permutation(args, 4)), args.canon, args)
    return EXIT_OK


def cmd_family(args: argparse.Namespace, settings: Settings) -> int:
    h = _require(args.edges, EdgeHexad, "family")
    forms = gcd_embedding_family(h, args.strength, jobs=settings.jobs)
    _print_forms(forms, h, args)
    return EXIT_OK


def cmd_search(args: argparse.Namespace, settings: Settings) -> int:
    edges = args.edges
    if isinstance(edges, EdgeTriple):
        forms = exhaustive_triangle_embeddings(edges, args.strength, budget=settings.budget)
    else:
        forms = exhaustive_embeddings(
            edges, args.strength, budget=settings.budget, jobs=settings.jobs
        )
    if args.format == "records":
        record = SearchRecord(
            edges=list(edges.edges),
            strength=args.strength,
            embeddings=[[list(v) for v in form.to_quats()] for form in forms],
        )
        print(record.to_json())
    else:
        _print_forms(forms, edges, args)
    return EXIT_OK


def cmd_search_z4(args: argparse.Namespace, settings: Settings) -> int:
    placements = search_z4(args.squared_edges, args.bound)
    print(f"# content squared {args.squared_edges.content_squared()}")
    print(f"# {len(placements)} placement(s) with bound {args.bound}")
    for placement in placements:
        print(" ".join("[" + ",".join(map(str, p)) + "]" for p in placement))
    return EXIT_OK


def _add_file(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", nargs="?", help="Vertex file; '-' or omitted reads stdin")
    parser.add_argument("--file", dest="file_option", metavar="FILE", help="Vertex file")


def _read_vertices(args: argparse.Namespace):
    if args.file and args.file_option:
        raise _UsageError("give the vertex file once, positionally or with --file")
    source = args.file_option or args.file or "-"
    if source == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    vertices = parse_vertices(text)
    if not vertices:
        raise _UsageError(f"no vertices in {source}")
    return vertices


def cmd_canon(args: argparse.Namespace, settings: Settings) -> int:
    vertices = _read_vertices(args)
    points = [v.vector[: args.dim] for v in vertices]
    form = canonical_points(points, None, args.strength)
    print("\n".join(form.to_lines()))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, settings: Settings) -> int:
    cases = run_census(
        args.kind,
        args.max,
        primitive_only=not args.all,
        checkpoint=Path(args.checkpoint) if args.checkpoint else None,
    )
    for case in itertools.islice(cases, args.limit):
        print(case)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    vertices = _read_vertices(args)
    edges = args.edges
    if len(vertices) != edges.vertex_count:
        print(
            f"expected {edges.vertex_count} vertices, found {len(vertices)}", file=sys.stderr
        )
        return EXIT_DOMAIN
    identity = tuple(range(edges.vertex_count))
    for order in itertools.permutations(vertices):
        candidate = LatticeEmbedding(tuple(order), edges, identity)
        if verify_embedding(candidate):
            print(f"ok: embedding of {edges}")
            return EXIT_OK
    print(f"mismatch: vertices do not realize {edges}", file=sys.stderr)
    return EXIT_DOMAIN


def cmd_squares(args: argparse.Namespace, settings: Settings) -> int:
    for solution in sorted(solve_three_squares(args.w)):
        print(",".join(map(str, solution)))
    return EXIT_OK


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-f", "--format", choices=["text", "records"], default="text", help="Output format"
    )
    common.add_argument("-j", "--jobs", type=_positive_int, help="Worker processes")
    common.add_argument(
        "--budget", type=_positive_int, help="Node budget for exhaustive searches"
    )
    common.add_argument("-c", "--config", help="TOML settings file")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="heronlattice", description="Lattice embeddings of Heronian simplices"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(func=func)
        return p

    p_pose = add("pose", cmd_pose, "Print the axial rational pose")
    p_pose.add_argument("-e", "--edges", type=_edges, required=True)
    p_pose.add_argument("-p", "--perm", help="Vertex permutation, e.g. QRPS")

    p_e2 = add("embed2", cmd_embed2, "Embed a Heronian triangle into Z2")
    p_e2.add_argument("-e", "--edges", type=_edges, required=True)
    p_e2.add_argument("-p", "--perm")
    p_e2.add_argument("--via", choices=["gauss", "z3"], default="gauss")
    p_e2.add_argument("--canon", choices=["none", "weak", "strong"], default="none")

    p_e3 = add("embed3", cmd_embed3, "Embed a Heronian tetrahedron into Z3")
    p_e3.add_argument("-e", "--edges", type=_edges, required=True)
    p_e3.add_argument("-p", "--perm")
    p_e3.add_argument("--canon", choices=["none", "weak", "strong"], default="none")

    p_fam = add("family", cmd_family, "Canonical GCD embeddings over all 24 poses")
    p_fam.add_argument("-e", "--edges", type=_edges, required=True)
    p_fam.add_argument("--strength", choices=["weak", "strong"], default="strong")

    p_canon = add("canon", cmd_canon, "Canonicalize an embedding file")
    _add_file(p_canon)
    p_canon.add_argument("--strength", choices=["weak", "strong"], default="strong")
    p_canon.add_argument("--dim", type=int, choices=[2, 3], default=3)

    p_search = add("search", cmd_search, "Enumerate every distinct embedding")
    p_search.add_argument("-e", "--edges", type=_edges, required=True)
    p_search.add_argument("--strength", choices=["weak", "strong"], default="strong")

    p_z4 = add("search-z4", cmd_search_z4, "Brute-force a pentatope in Z4")
    p_z4.add_argument("-s", "--squared-edges", type=_squared_edges, required=True)
    p_z4.add_argument("-b", "--bound", type=_non_negative_int, default=2)

    p_enum = add("enumerate", cmd_enumerate, "List Heronian simplices by diameter")
    p_enum.add_argument("--kind", choices=["triangle", "tetra"], default="tetra")
    p_enum.add_argument("--max", type=_positive_int, required=True, help="Maximum diameter")
    scope = p_enum.add_mutually_exclusive_group()
    scope.add_argument(
        "--primitive", dest="all", action="store_false", help="Primitive cases only (default)"
    )
    scope.add_argument("--all", action="store_true", help="Include imprimitive cases")
    p_enum.add_argument("--checkpoint", help="Resumable TOML checkpoint file")
    p_enum.add_argument(
        "-n", "--limit", type=_non_negative_int, help="Stop after this many cases"
    )

    p_verify = add("verify", cmd_verify, "Check an embedding file against edges")
    _add_file(p_verify)
    p_verify.add_argument("-e", "--edges", type=_edges, required=True)

    p_sq = add("squares", cmd_squares, "Solve x^2 + y^2 + z^2 = w^2")
    p_sq.add_argument("-w", "--w", type=_positive_int, required=True)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _settings(args: argparse.Namespace) -> Settings:
    settings = load_settings(args.config)
    overrides = {}
    if args.budget is not None:
        overrides["budget"] = args.budget
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if overrides:
        settings = Settings.from_mapping(
            {"budget": settings.budget, "jobs": settings.jobs, **overrides}
        )
    return settings


def run(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        settings = _settings(args)
        logger.debug("%s with %s", args.command, settings)
        return args.func(args, settings)
    except (ConfigValidationError, _UsageError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, CheckpointLockError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main(argv: list[str] | None = None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
