"""Command-line orchestration.

Exit codes: 0 success, 1 usage error, 2 data error, 3 computation error.
Diagnostics go to stderr, results to stdout or to files under the output
directory (flag --output-dir, or the QAGRAPH_OUTPUT_DIR environment
variable). Configuration precedence is flags > config file > defaults; the
config file is flat ``key = value`` text with '#' comments, keys matching
the long option names.

Every file output embeds a provenance header (input fingerprint plus the
resolved parameter set) in the format's comment syntax, and every seeded
analysis records its seed there, so identical invocations reproduce
byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import centrality, community, ingest, linkpred, report, sampling, spectral
from .centrality import Measure
from .errors import ComputationError, DataError, QagraphError
from .graph import Graph
from .linkpred import LinkMetric

ENV_OUTPUT_DIR = "QAGRAPH_OUTPUT_DIR"

MEASURES = {
    "degree": centrality.degree_centrality,
    "betweenness": centrality.betweenness_centrality,
    "closeness": centrality.closeness_centrality,
    "eigenvector": centrality.eigenvector_centrality,
    "pagerank": centrality.pagerank,
    "clustering": None,  # handled specially (returns scores + average)
}

MATRICES = ("adjacency", "incidence", "laplacian", "normalized-laplacian",
            "directed-laplacian", "directed-combinatorial-laplacian", "bethe-hessian")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        raise _UsageError(message)


@dataclass
class RunConfig:
    """Resolved invocation: every knob pinned, seeds included, for provenance."""

    command: str
    input: str | None
    input_format: str | None
    graph_kind: str | None
    directed: bool
    output_dir: Path
    output_format: str
    fixed_timestamp: bool
    params: dict[str, str] = field(default_factory=dict)
    fingerprint: str = ""

    def provenance(self) -> dict[str, str]:
        out = {"command": self.command, "input_fingerprint": self.fingerprint}
        if self.input is not None:
            out["input"] = str(self.input)
        if self.graph_kind is not None:
            out["graph"] = self.graph_kind
        out.update(self.params)
        return out

    def comment_lines(self) -> list[str]:
        prov = self.provenance()
        return [f"{k}={prov[k]}" for k in sorted(prov)]


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def run(argv) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        if getattr(ns, "handler", None) is None:
            parser.print_usage(sys.stderr)
            print("error: a subcommand is required", file=sys.stderr)
            return 1
        config = _load_config(getattr(ns, "config", None))
        ns.handler(ns, config)
        return 0
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help and friends
        code = exc.code if isinstance(exc.code, int) else 0
        return code
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 3
    except QagraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# -- parser ------------------------------------------------------------------

def _common(sub):
    sub.add_argument("--input", help="input data file")
    sub.add_argument("--input-format", choices=("csv", "xml", "edgelist"),
                     help="input parsing format (default: sniffed from suffix)")
    sub.add_argument("--graph",
                     choices=("user-interaction", "tag-cooccurrence", "edge-list"),
                     help="graph to build from the input")
    sub.add_argument("--directed", action="store_const", const=True,
                     help="treat edge-list input as directed")
    sub.add_argument("--config", help="flat key=value config file")
    sub.add_argument("--output-dir", help="directory for file outputs "
                     f"(default ${ENV_OUTPUT_DIR} or '.')")
    sub.add_argument("--output-format", choices=("text", "json", "csv"),
                     help="report rendering format (default text)")
    sub.add_argument("--fixed-timestamp", action="store_const", const=True,
                     help="emit a constant timestamp for byte-stable output")
    sub.add_argument("--out", help="write the main result to this file "
                     "instead of standard output")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qagraph",
                     description="Graph analytics for Q&A-community networks")
    subs = parser.add_subparsers(dest="command")

    p = subs.add_parser("ingest", parents=[], help="parse, validate, summarize a dump")
    _common(p)
    p.set_defaults(handler=_cmd_ingest)

    p = subs.add_parser("analyze", help="centrality measures, paths, diameter")
    _common(p)
    p.add_argument("--measure", choices=tuple(MEASURES))
    p.add_argument("--top", type=int, help="list length for top-k tables (default 5)")
    p.add_argument("--damping", type=float, help="pagerank damping (default 0.85)")
    p.add_argument("--tol", type=float, help="iterative solver tolerance")
    p.add_argument("--max-iter", type=int, help="iterative solver budget")
    p.add_argument("--no-normalize", action="store_const", const=True,
                   help="report raw betweenness sums")
    p.add_argument("--diameter", action="store_const", const=True,
                   help="report the longest shortest path")
    p.add_argument("--largest-component", action="store_const", const=True,
                   help="restrict diameter to the largest component")
    p.add_argument("--path", nargs=2, type=int, metavar=("SRC", "DST"),
                   help="report the shortest path between two nodes")
    p.add_argument("--scores-csv", help="also write the full score table here")
    p.set_defaults(handler=_cmd_analyze)

    p = subs.add_parser("community", help="community detection")
    _common(p)
    p.add_argument("--algorithm", choices=("louvain", "girvan-newman", "lpa"),
                   required=True)
    p.add_argument("--seed", type=int, help="random seed (default 0)")
    p.add_argument("--resolution", type=float, help="louvain resolution (default 1.0)")
    p.add_argument("--target", type=int, help="girvan-newman community count target")
    p.add_argument("--max-iter", type=int, help="lpa sweep budget (default 100)")
    p.add_argument("--dendrogram", help="write the girvan-newman step log (JSON) here")
    p.set_defaults(handler=_cmd_community)

    p = subs.add_parser("linkpred", help="link-prediction candidate ranking")
    _common(p)
    p.add_argument("--metric", choices=("jaccard", "adamic-adar"), required=True)
    p.add_argument("--node", type=int, required=True, help="node to rank candidates for")
    p.add_argument("--top", type=int, help="candidates to keep (default 5)")
    p.set_defaults(handler=_cmd_linkpred)

    p = subs.add_parser("spectral", help="matrices, connectivity, embeddings")
    _common(p)
    p.add_argument("action", choices=("matrix", "connectivity", "fiedler",
                                      "ordering", "embed", "classify"))
    p.add_argument("--matrix", choices=MATRICES)
    p.add_argument("--layout", choices=("dense", "coo"), help="matrix text layout")
    p.add_argument("--unoriented", action="store_const", const=True,
                   help="unoriented incidence matrix")
    p.add_argument("--teleport", type=float, help="teleport for directed laplacians")
    p.add_argument("--r", type=float, help="bethe hessian deformation parameter")
    p.add_argument("--k", type=int, help="embedding length (default 16)")
    p.add_argument("--train", help="training directory: <label>/*.txt edge lists")
    p.add_argument("--test", nargs="+", help="edge-list files to classify")
    p.set_defaults(handler=_cmd_spectral)

    p = subs.add_parser("sample", help="subnetwork sampling")
    _common(p)
    p.add_argument("--method", choices=("snowball", "random", "stratified"),
                   required=True)
    p.add_argument("--seed", type=int, help="random seed (default 0)")
    p.add_argument("--seeds", help="comma-separated seed node ids (snowball)")
    p.add_argument("--depth", type=int, help="snowball expansion depth")
    p.add_argument("--count", type=int, help="random sample size")
    p.add_argument("--attribute", help="stratification key (default 'kind')")
    p.add_argument("--strata", help="per-stratum counts, e.g. 'User=3,Tag=all'")
    p.add_argument("--to", choices=("edgelist", "graphml", "dot"),
                   help="sampled-graph output format (default edgelist)")
    p.set_defaults(handler=_cmd_sample)

    p = subs.add_parser("report", help="Q&A health queries")
    _common(p)
    p.add_argument("--query", choices=("top-tags", "unanswered", "users-in-tag"),
                   required=True)
    p.add_argument("--tag", help="tag for users-in-tag")
    p.add_argument("--top", type=int, help="list length (default 5)")
    p.set_defaults(handler=_cmd_report)

    p = subs.add_parser("export", help="write the graph for external visualizers")
    _common(p)
    p.add_argument("--to", choices=("graphml", "dot", "edgelist"), required=True)
    p.set_defaults(handler=_cmd_export)

    return parser


# -- configuration -------------------------------------------------------------

def _load_config(path) -> dict[str, str]:
    if not path:
        return {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read config {path}: {exc}") from exc
    config = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        if "=" not in body:
            raise DataError(f"config line {line_no}: expected 'key = value'")
        key, _, value = body.partition("=")
        config[key.strip().replace("-", "_")] = value.strip()
    return config


_BOOL_WORDS = {"1": True, "true": True, "yes": True,
               "0": False, "false": False, "no": False}


def _resolve(ns, config, key, default, cast=str):
    value = getattr(ns, key, None)
    if value is not None:
        return value
    raw = config.get(key)
    if raw is None:
        return default
    if cast is bool:
        word = raw.lower()
        if word not in _BOOL_WORDS:
            raise DataError(f"config key {key}: expected boolean, got {raw!r}")
        return _BOOL_WORDS[word]
    try:
        return cast(raw)
    except ValueError as exc:
        raise DataError(f"config key {key}: {exc}") from exc


def _run_config(ns, config, needs_input=True) -> RunConfig:
    input_path = _resolve(ns, config, "input", None)
    if needs_input and input_path is None:
        raise _UsageError("--input is required")
    input_format = _resolve(ns, config, "input_format", None)
    if input_path is not None and input_format is None:
        suffix = Path(input_path).suffix.lower()
        input_format = {".csv": "csv", ".xml": "xml"}.get(suffix, "edgelist")
    graph_kind = _resolve(ns, config, "graph", None)
    if graph_kind is None and input_format is not None:
        graph_kind = "edge-list" if input_format == "edgelist" else "user-interaction"
    output_dir = _resolve(ns, config, "output_dir",
                          os.environ.get(ENV_OUTPUT_DIR, "."))
    cfg = RunConfig(
        command=ns.command,
        input=input_path,
        input_format=input_format,
        graph_kind=graph_kind,
        directed=_resolve(ns, config, "directed", False, bool),
        output_dir=Path(output_dir),
        output_format=_resolve(ns, config, "output_format", "text"),
        fixed_timestamp=_resolve(ns, config, "fixed_timestamp", False, bool),
    )
    if input_path is not None:
        cfg.fingerprint = report.fingerprint_file(input_path)
    return cfg


def _load_dataset(cfg: RunConfig) -> ingest.Dataset:
    if cfg.input_format not in ("csv", "xml"):
        raise DataError(
            f"command needs a posts dump (csv or xml), got format {cfg.input_format!r}")
    return ingest.parse_posts(cfg.input, cfg.input_format)


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.graph_kind == "edge-list":
        if cfg.input_format != "edgelist":
            raise DataError("graph kind edge-list requires an edge-list input file")
        return ingest.load_edge_list(cfg.input, directed=cfg.directed)
    ds = _load_dataset(cfg)
    if cfg.graph_kind == "tag-cooccurrence":
        return ingest.build_tag_cooccurrence_graph(ds)
    return ingest.build_user_interaction_graph(ds)


# -- output helpers -------------------------------------------------------------

def _emit(text: str, ns, cfg: RunConfig, dest_attr: str = "out") -> None:
    dest = getattr(ns, dest_attr, None)
    if dest:
        path = Path(dest)
        if not path.is_absolute():
            path = cfg.output_dir / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def _comment_header(cfg: RunConfig) -> str:
    return "".join(f"# {line}\n" for line in cfg.comment_lines())


def _emit_report(sections, title, ns, config, cfg: RunConfig) -> None:
    rep = report.make_report(title, sections, cfg.fingerprint,
                             parameters=cfg.provenance(),
                             fixed_timestamp=cfg.fixed_timestamp)
    rendered = report.render(rep, cfg.output_format).decode("utf-8")
    _emit(rendered, ns, cfg)


# -- subcommand handlers ----------------------------------------------------------

def _cmd_ingest(ns, config):
    cfg = _run_config(ns, config)
    ds = _load_dataset(cfg)
    summary = report.Section(
        "Dataset summary", ["metric", "value"],
        [["posts", str(len(ds.posts))],
         ["questions", str(len(ds.questions()))],
         ["answers", str(len(ds.answers()))],
         ["users", str(len(ds.users))],
         ["quarantined_rows", str(len(ds.quarantined))]])
    sections = [summary]
    if ds.quarantined:
        rows = [[str(q.line), q.reason] for q in ds.quarantined]
        sections.append(report.Section("Quarantined rows", ["line", "reason"], rows))
    _emit_report(sections, f"Ingest {Path(cfg.input).name}", ns, config, cfg)


def _cmd_analyze(ns, config):
    cfg = _run_config(ns, config)
    top = _resolve(ns, config, "top", 5, int)
    cfg.params["top"] = str(top)
    g = _load_graph(cfg)
    sections = []
    scores = None
    measure = _resolve(ns, config, "measure", None)
    if measure:
        cfg.params["measure"] = measure
        if measure == "clustering":
            scores, avg = centrality.clustering_coefficient(g)
            sections.append(report.centrality_report(scores, top))
            sections.append(report.Section("Average clustering coefficient",
                                           ["average"], [[repr(avg)]]))
        elif measure == "pagerank":
            damping = _resolve(ns, config, "damping", 0.85, float)
            cfg.params["damping"] = repr(damping)
            scores = centrality.pagerank(g, damping=damping)
            sections.append(report.centrality_report(scores, top))
        elif measure == "betweenness":
            normalized = not _resolve(ns, config, "no_normalize", False, bool)
            cfg.params["normalized"] = str(normalized).lower()
            scores = centrality.betweenness_centrality(g, normalized=normalized)
            sections.append(report.centrality_report(scores, top))
        else:
            scores = MEASURES[measure](g)
            sections.append(report.centrality_report(scores, top))
        sections.append(report.degree_distribution(g))
    if _resolve(ns, config, "diameter", False, bool):
        largest = _resolve(ns, config, "largest_component", False, bool)
        path_result = centrality.diameter_path(g, largest_component=largest)
        sections.append(_path_section("Diameter path", path_result))
    path_pair = getattr(ns, "path", None)
    if path_pair:
        path_result = centrality.shortest_path(g, path_pair[0], path_pair[1])
        sections.append(_path_section("Shortest path", path_result))
    if not sections:
        raise _UsageError("analyze needs --measure, --diameter, or --path")
    scores_csv = getattr(ns, "scores_csv", None)
    if scores_csv and scores is not None:
        _emit(_scores_csv_text(scores, cfg), ns, cfg, dest_attr="scores_csv")
    _emit_report(sections, f"Analysis of {Path(cfg.input).name}", ns, config, cfg)


def _path_section(heading, path_result) -> report.Section:
    text = (f"The shortest path is from node {path_result.src} "
            f"to node {path_result.dst}.")
    row = [str(path_result.src), str(path_result.dst), repr(path_result.length),
           "->".join(str(v) for v in path_result.nodes)]
    return report.Section(heading, ["src", "dst", "length", "path"], [row], text)


def _scores_csv_text(scores, cfg: RunConfig) -> str:
    ranked = centrality.top_k(scores, len(scores.scores))
    body = "node_id,score\n" + "".join(f"{v},{s!r}\n" for v, s in ranked)
    return _comment_header(cfg) + body


def _cmd_community(ns, config):
    cfg = _run_config(ns, config)
    algorithm = ns.algorithm
    seed = _resolve(ns, config, "seed", 0, int)
    cfg.params.update({"algorithm": algorithm, "seed": str(seed)})
    g = _load_graph(cfg)
    if algorithm == "louvain":
        resolution = _resolve(ns, config, "resolution", 1.0, float)
        cfg.params["resolution"] = repr(resolution)
        part = community.louvain(g, resolution=resolution, seed=seed)
    elif algorithm == "lpa":
        max_iter = _resolve(ns, config, "max_iter", 100, int)
        cfg.params["max_iter"] = str(max_iter)
        part = community.label_propagation(g, seed=seed, max_iter=max_iter)
    else:
        target = _resolve(ns, config, "target", None, int)
        if target is not None:
            cfg.params["target"] = str(target)
        dendrogram = community.girvan_newman(g, target_communities=target)
        if not dendrogram.steps:
            raise ComputationError("girvan-newman produced no splits (no edges)")
        part = dendrogram.best_partition()
        dendro_dest = getattr(ns, "dendrogram", None)
        if dendro_dest:
            _emit(_dendrogram_json(dendrogram, cfg), ns, cfg, dest_attr="dendrogram")
    lines = _comment_header(cfg)
    lines += f"# modularity={part.modularity!r}\n"
    lines += "node_id,community\n"
    for v in sorted(part.assignment):
        lines += f"{v},{part.assignment[v]}\n"
    _emit(lines, ns, cfg)


def _dendrogram_json(dendrogram, cfg: RunConfig) -> str:
    payload = {
        "_provenance": dict(sorted(cfg.provenance().items())),
        "steps": [
            {
                "removed_edge": list(step.removed_edge),
                "modularity": step.modularity,
                "assignment": {str(v): c for v, c in sorted(step.partition.assignment.items())},
            }
            for step in dendrogram.steps
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _cmd_linkpred(ns, config):
    cfg = _run_config(ns, config)
    metric = LinkMetric.JACCARD if ns.metric == "jaccard" else LinkMetric.ADAMIC_ADAR
    top = _resolve(ns, config, "top", 5, int)
    cfg.params.update({"metric": ns.metric, "node": str(ns.node), "top": str(top)})
    g = _load_graph(cfg)
    ranked = linkpred.top_candidates(g, ns.node, top, metric)
    lines = _comment_header(cfg) + "u,v,score\n"
    for cand in ranked:
        lines += f"{cand.u},{cand.v},{cand.score!r}\n"
    _emit(lines, ns, cfg)


def _cmd_spectral(ns, config):
    needs_input = ns.action != "classify"
    cfg = _run_config(ns, config, needs_input=needs_input)
    cfg.params["action"] = ns.action
    if ns.action == "classify":
        _spectral_classify(ns, config, cfg)
        return
    g = _load_graph(cfg)
    if ns.action == "matrix":
        name = _resolve(ns, config, "matrix", "adjacency")
        layout = _resolve(ns, config, "layout", "dense")
        cfg.params.update({"matrix": name, "layout": layout})
        matrix = _build_matrix(ns, config, cfg, g, name)
        body = (spectral.matrix_to_dense_text(matrix) if layout == "dense"
                else spectral.matrix_to_coo_text(matrix))
        _emit(_comment_header(cfg) + body, ns, cfg)
    elif ns.action == "connectivity":
        value = spectral.algebraic_connectivity(g)
        _emit(_comment_header(cfg) + f"algebraic_connectivity={value!r}\n", ns, cfg)
    elif ns.action == "fiedler":
        vec = spectral.fiedler_vector(g)
        lines = _comment_header(cfg) + "node_id,value\n"
        for v in sorted(vec):
            lines += f"{v},{vec[v]!r}\n"
        _emit(lines, ns, cfg)
    elif ns.action == "ordering":
        order = spectral.spectral_ordering(g)
        lines = _comment_header(cfg) + "rank,node_id\n"
        for rank, v in enumerate(order):
            lines += f"{rank},{v}\n"
        _emit(lines, ns, cfg)
    elif ns.action == "embed":
        k = _resolve(ns, config, "k", 16, int)
        cfg.params["k"] = str(k)
        features = spectral.graph_embedding(g, k)
        lines = _comment_header(cfg) + "position,eigenvalue\n"
        for i, value in enumerate(features.eigenvalues, start=1):
            lines += f"{i},{float(value)!r}\n"
        _emit(lines, ns, cfg)


def _build_matrix(ns, config, cfg, g, name):
    if name == "adjacency":
        return spectral.adjacency_matrix(g)
    if name == "incidence":
        oriented = not _resolve(ns, config, "unoriented", False, bool)
        cfg.params["oriented"] = str(oriented).lower()
        return spectral.incidence_matrix(g, oriented=oriented)
    if name == "laplacian":
        return spectral.laplacian(g)
    if name == "normalized-laplacian":
        return spectral.normalized_laplacian(g)
    if name == "directed-laplacian":
        teleport = _resolve(ns, config, "teleport", 0.0, float)
        cfg.params["teleport"] = repr(teleport)
        return spectral.directed_laplacian(g, teleport=teleport)
    if name == "directed-combinatorial-laplacian":
        teleport = _resolve(ns, config, "teleport", 0.0, float)
        cfg.params["teleport"] = repr(teleport)
        return spectral.directed_combinatorial_laplacian(g, teleport=teleport)
    r = _resolve(ns, config, "r", None, float)
    if r is not None:
        cfg.params["r"] = repr(r)
    return spectral.bethe_hessian(g, r=r)


def _spectral_classify(ns, config, cfg: RunConfig):
    train_dir = _resolve(ns, config, "train", None)
    if not train_dir:
        raise _UsageError("spectral classify requires --train DIR")
    tests = getattr(ns, "test", None) or []
    if not tests:
        raise _UsageError("spectral classify requires --test FILE...")
    k = _resolve(ns, config, "k", 16, int)
    cfg.params.update({"k": str(k), "train": str(train_dir)})
    root = Path(train_dir)
    if not root.is_dir():
        raise DataError(f"training directory {train_dir} does not exist")
    train = []
    for label_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        for file in sorted(label_dir.iterdir()):
            train.append((ingest.load_edge_list(file), label_dir.name))
    test_graphs = [ingest.load_edge_list(p) for p in tests]
    labels = spectral.classify(train, test_graphs, k)
    lines = _comment_header(cfg) + "graph,label\n"
    for path, label in zip(tests, labels):
        lines += f"{Path(path).name},{label}\n"
    _emit(lines, ns, cfg)


def _cmd_sample(ns, config):
    cfg = _run_config(ns, config)
    method = ns.method
    seed = _resolve(ns, config, "seed", 0, int)
    cfg.params.update({"method": method, "seed": str(seed)})
    g = _load_graph(cfg)
    if method == "snowball":
        raw = _resolve(ns, config, "seeds", None)
        if not raw:
            raise _UsageError("snowball sampling requires --seeds")
        depth = _resolve(ns, config, "depth", 1, int)
        seeds = [int(tok) for tok in str(raw).split(",") if tok.strip()]
        cfg.params.update({"seeds": ",".join(map(str, seeds)), "depth": str(depth)})
        sampled = sampling.snowball_sample(g, seeds, depth)
    elif method == "random":
        count = _resolve(ns, config, "count", None, int)
        if count is None:
            raise _UsageError("random sampling requires --count")
        cfg.params["count"] = str(count)
        sampled = sampling.random_sample(g, count, seed=seed)
    else:
        attribute = _resolve(ns, config, "attribute", "kind")
        raw = _resolve(ns, config, "strata", None)
        if not raw:
            raise _UsageError("stratified sampling requires --strata")
        counts = _parse_strata(str(raw))
        cfg.params.update({"attribute": attribute, "strata": str(raw)})
        sampled = sampling.stratified_sample(g, attribute, counts, seed=seed)
    fmt = _resolve(ns, config, "to", "edgelist")
    cfg.params["to"] = fmt
    _emit(report.graph_to_text(sampled, fmt, cfg.comment_lines()), ns, cfg)


def _parse_strata(raw: str) -> dict:
    counts = {}
    for item in raw.split(","):
        if not item.strip():
            continue
        name, _, value = item.partition("=")
        value = value.strip().lower()
        counts[name.strip()] = None if value == "all" else int(value)
    return counts


def _cmd_report(ns, config):
    cfg = _run_config(ns, config)
    query = ns.query
    top = _resolve(ns, config, "top", 5, int)
    cfg.params.update({"query": query, "top": str(top)})
    ds = _load_dataset(cfg)
    if query == "top-tags":
        section = report.top_tags(ds, top)
    elif query == "unanswered":
        section = report.unanswered_by_tag(ds, top)
    else:
        tag = _resolve(ns, config, "tag", None)
        if not tag:
            raise _UsageError("users-in-tag requires --tag")
        cfg.params["tag"] = tag
        section = report.users_answering_in_tag(ds, tag, top)
    _emit_report([section], f"Report on {Path(cfg.input).name}", ns, config, cfg)


def _cmd_export(ns, config):
    cfg = _run_config(ns, config)
    fmt = ns.to
    cfg.params["to"] = fmt
    g = _load_graph(cfg)
    _emit(report.graph_to_text(g, fmt, cfg.comment_lines()), ns, cfg)
