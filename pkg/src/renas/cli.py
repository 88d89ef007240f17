"""Command-line interface: index, recommend, eval, graph."""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from pathlib import Path

from .errors import (
    CacheFormatError,
    DatasetFormatError,
    DegenerateNameError,
    EntityResolutionError,
    RenasError,
)
from .evaluation import evaluate, load_dataset
from .graph import (
    RelationshipGraph,
    build_graph,
    dump_edges,
    graph_from_payload,
    graph_to_payload,
)
from .lexical import load_abbreviation_file
from .report import (
    metrics_per_query_tsv,
    metrics_summary_tsv,
    metrics_table,
    plot_alpha_sweep,
    plot_project_metrics,
    recommendation_payload,
    recommendation_table,
    recommendation_tsv,
    sweep_summary_tsv,
)
from .scoring import (
    DEFAULT_ALPHA,
    DEFAULT_BETA,
    RANKED,
    THRESHOLD_SET,
    ScoreConfig,
    recommend,
)
from .sourcemodel.model import SourceModel
from .sourcemodel.project import parse_project, project_digest

logger = logging.getLogger(__name__)

CACHE_DIR_ENV = "RENAS_CACHE_DIR"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_SEED = 2


def _json_dumps(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def write_model(
    model: SourceModel, path: str | Path, graph: RelationshipGraph | None = None
) -> None:
    """Serialize the model together with its relationship-graph cache."""
    payload = model.to_payload()
    payload["graph"] = graph_to_payload(graph if graph is not None else build_graph(model))
    Path(path).write_text(_json_dumps(payload), encoding="utf-8")


def read_model(path: str | Path) -> tuple[SourceModel, RelationshipGraph]:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"{path}: invalid JSON: {exc}") from exc
    model = SourceModel.from_payload(payload)
    if "graph" in payload:
        graph = graph_from_payload(payload["graph"])
    else:
        graph = build_graph(model)
    return model, graph


def _dictionary_from_args(args) -> dict[str, str] | None:
    if getattr(args, "abbreviations", None):
        return load_abbreviation_file(args.abbreviations)
    return None


def _cache_key(root: Path, user_dictionary) -> str:
    files = sorted(
        (p for p in root.rglob("*.java") if p.is_file()),
        key=lambda p: p.relative_to(root).as_posix(),
    )
    digest = project_digest(
        [(p.relative_to(root).as_posix(), p.read_bytes()) for p in files]
    )
    hasher = hashlib.sha256(digest.encode("ascii"))
    for abbr, expansion in sorted((user_dictionary or {}).items()):
        hasher.update(f"{abbr}={expansion}\n".encode("utf-8"))
    return hasher.hexdigest()


def load_or_parse(
    root: str | Path, user_dictionary=None
) -> tuple[SourceModel, RelationshipGraph]:
    """Parse the project, going through the cache directory when configured."""
    root = Path(root)
    cache_dir = os.environ.get(CACHE_DIR_ENV)
    if not cache_dir or not root.is_dir():
        model = parse_project(root, user_dictionary)
        return model, build_graph(model)
    cache_path = Path(cache_dir) / f"{_cache_key(root, user_dictionary)}.json"
    if cache_path.is_file():
        return read_model(cache_path)
    model = parse_project(root, user_dictionary)
    graph = build_graph(model)
    cache_path.parent.mkdir(parents=True, exist_ok=True)
    write_model(model, cache_path, graph)
    return model, graph


# -- subcommands ---------------------------------------------------------------


def cmd_index(args) -> int:
    try:
        model = parse_project(args.root, _dictionary_from_args(args))
    except (FileNotFoundError, NotADirectoryError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    write_model(model, args.out, build_graph(model))
    diag = model.diagnostics
    print(
        f"indexed {diag['parsedFiles']}/{diag['files']} files, "
        f"{len(model.entities)} entities, warnings: {diag['warningCount']}"
    )
    for path, message in diag["skippedFiles"]:
        print(f"warning: skipped {path}: {message}", file=sys.stderr)
    return EXIT_OK


def cmd_graph(args) -> int:
    try:
        model, graph = load_or_parse(args.root, _dictionary_from_args(args))
    except (FileNotFoundError, NotADirectoryError, OSError, ValueError, RenasError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    text = dump_edges(graph)
    if args.dump:
        Path(args.dump).write_text(text, encoding="utf-8")
        print(f"wrote {len(graph.edges)} edges to {args.dump}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _score_config(args, mode: str) -> ScoreConfig:
    return ScoreConfig(
        alpha=args.alpha, beta=args.beta, mode=mode, cap=args.cap
    )


def cmd_recommend(args) -> int:
    try:
        user_dictionary = _dictionary_from_args(args)
        model, graph = load_or_parse(args.root, user_dictionary)
    except (FileNotFoundError, NotADirectoryError, OSError, ValueError, RenasError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    try:
        seed = model.resolve(args.file, args.line, args.old, args.kind)
    except EntityResolutionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEED
    mode = RANKED if args.rank else THRESHOLD_SET
    try:
        result = recommend(
            model,
            graph,
            seed,
            args.new,
            _score_config(args, mode),
            user_dictionary,
        )
    except DegenerateNameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEED
    output = (
        _json_dumps(recommendation_payload(result))
        if args.json
        else recommendation_table(result)
    )
    sys.stdout.write(output)
    if args.out:
        Path(args.out).write_text(recommendation_tsv(result), encoding="utf-8")
    return EXIT_OK


def _parse_alphas(raw: str) -> list[float]:
    alphas = []
    for piece in raw.split(","):
        piece = piece.strip()
        if piece:
            alphas.append(float(piece))
    if not alphas:
        raise ValueError("no alpha values given")
    return alphas


def cmd_eval(args) -> int:
    try:
        alphas = _parse_alphas(args.alpha)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    try:
        datasets = load_dataset(args.dataset)
        user_dictionary = _dictionary_from_args(args)
        models = {
            dataset.root: load_or_parse(dataset.root, user_dictionary)[0]
            for dataset in datasets
        }
        sweep = []
        for alpha in alphas:
            config = ScoreConfig(alpha=alpha, beta=args.beta, cap=args.cap)
            sweep.append((alpha, evaluate(datasets, config, models)))
    except (DatasetFormatError, FileNotFoundError, NotADirectoryError, OSError,
            ValueError, RenasError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    out_dir = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)

    for alpha, rep in sweep:
        suffix = f"_alpha{alpha:g}" if len(sweep) > 1 else ""
        if args.json:
            sys.stdout.write(_json_dumps({"alpha": alpha, **rep.to_payload()}))
        else:
            if len(sweep) > 1:
                sys.stdout.write(f"== alpha = {alpha:g}\n")
            sys.stdout.write(metrics_table(rep))
        if out_dir is not None:
            (out_dir / f"report{suffix}.json").write_text(
                _json_dumps({"alpha": alpha, **rep.to_payload()}), encoding="utf-8"
            )
            (out_dir / f"per_query{suffix}.tsv").write_text(
                metrics_per_query_tsv(rep), encoding="utf-8"
            )
            (out_dir / f"summary{suffix}.tsv").write_text(
                metrics_summary_tsv(rep), encoding="utf-8"
            )
            plot_project_metrics(rep, out_dir / f"metrics_by_project{suffix}.png")

    if out_dir is not None and len(sweep) > 1:
        (out_dir / "sweep.tsv").write_text(sweep_summary_tsv(sweep), encoding="utf-8")
        plot_alpha_sweep(sweep, out_dir / "alpha_sweep.png")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="renas",
        description=(
            "Recommends identifiers that should be co-renamed with a given "
            "rename, prioritized by word similarity and relationship distance."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scoring_flags(p):
        p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA,
                       help="similarity weight in the combined score")
        p.add_argument("--beta", type=float, default=DEFAULT_BETA,
                       help="minimum combined score for the threshold set")
        p.add_argument("--cap", type=int, default=None,
                       help="maximum relationship distance to explore")

    def add_dictionary_flag(p):
        p.add_argument("--abbreviations", metavar="FILE", default=None,
                       help="user abbreviation dictionary (abbr=expansion lines)")

    p_index = sub.add_parser("index", help="parse a project and save the model")
    p_index.add_argument("root", help="project root directory")
    p_index.add_argument("--out", required=True, help="model file to write")
    add_dictionary_flag(p_index)
    p_index.set_defaults(func=cmd_index)

    p_rec = sub.add_parser("recommend", help="recommend co-renames for one rename")
    p_rec.add_argument("root", help="project root directory")
    p_rec.add_argument("--file", required=True,
                       help="file of the renamed identifier, relative to root")
    p_rec.add_argument("--line", required=True, type=int,
                       help="declaration line of the renamed identifier")
    p_rec.add_argument("--old", required=True, help="identifier before the rename")
    p_rec.add_argument("--new", required=True, help="identifier after the rename")
    p_rec.add_argument("--kind", default=None,
                       choices=["class", "interface", "method", "field",
                                "parameter", "localVariable"],
                       help="disambiguate the seed entity")
    group = p_rec.add_mutually_exclusive_group()
    group.add_argument("--threshold", dest="rank", action="store_false",
                       help="recommend the set scoring at least beta (default)")
    group.add_argument("--rank", dest="rank", action="store_true",
                       help="rank every reachable candidate")
    p_rec.set_defaults(rank=False)
    add_scoring_flags(p_rec)
    p_rec.add_argument("--json", action="store_true",
                       help="structured output on stdout")
    p_rec.add_argument("--out", default=None, help="write the report as TSV")
    add_dictionary_flag(p_rec)
    p_rec.set_defaults(func=cmd_recommend)

    p_eval = sub.add_parser("eval", help="score the recommender on a dataset")
    p_eval.add_argument("dataset", help="co-renamed-set dataset file (JSON)")
    p_eval.add_argument("--alpha", default=str(DEFAULT_ALPHA),
                        help="alpha value, or a comma-separated sweep")
    p_eval.add_argument("--beta", type=float, default=DEFAULT_BETA)
    p_eval.add_argument("--cap", type=int, default=None)
    p_eval.add_argument("--json", action="store_true",
                        help="structured output on stdout")
    p_eval.add_argument("--out", default=None,
                        help="directory for TSV reports and figures")
    add_dictionary_flag(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_graph = sub.add_parser("graph", help="export the relationship graph")
    p_graph.add_argument("root", help="project root directory")
    p_graph.add_argument("--dump", default=None, help="edge list file to write")
    add_dictionary_flag(p_graph)
    p_graph.set_defaults(func=cmd_graph)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
