"""Report assembly and serialization, plus graph exports (GraphML/DOT/edge list).

Every table keeps the deterministic ordering of its producing operation, so
rendered reports are byte-stable given a fixed timestamp.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

from .centrality import Measure, ScoreMap, top_k
from .errors import DataError, DomainError
from .graph import Graph
from .ingest import Dataset, PostType

FIXED_TIMESTAMP = "1970-01-01T00:00:00Z"

MEASURE_LABELS = {
    Measure.DEGREE: "degree centrality",
    Measure.BETWEENNESS: "betweenness centrality",
    Measure.CLOSENESS: "closeness centrality",
    Measure.EIGENVECTOR: "eigenvector centrality",
    Measure.PAGERANK: "PageRank",
    Measure.CLUSTERING: "clustering coefficient",
}


@dataclass
class Section:
    heading: str
    header: list[str]
    rows: list[list[str]]
    text: str = ""


@dataclass
class Report:
    title: str
    sections: list[Section]
    generated_at: str
    input_fingerprint: str
    parameters: dict[str, str] = field(default_factory=dict)


def fingerprint_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def fingerprint_file(path) -> str:
    try:
        return fingerprint_bytes(Path(path).read_bytes())
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc


def timestamp(fixed: bool) -> str:
    if fixed:
        return FIXED_TIMESTAMP
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def make_report(title: str, sections: list[Section], input_fingerprint: str = "",
                parameters: dict[str, str] | None = None,
                fixed_timestamp: bool = False) -> Report:
    return Report(title, sections, timestamp(fixed_timestamp),
                  input_fingerprint, dict(parameters or {}))


# -- sections -----------------------------------------------------------------

def centrality_report(scores: ScoreMap, k: int = 5) -> Section:
    """Top-k table plus the one-line summary sentence."""
    ranking = top_k(scores, k)
    label = MEASURE_LABELS[scores.measure]
    text = ""
    if ranking:
        id_list = ", ".join(str(v) for v, _ in ranking)
        text = f"The top {k} nodes with the highest {label} are: {id_list}"
    rows = [[str(rank), str(v), repr(s)] for rank, (v, s) in enumerate(ranking, start=1)]
    return Section(f"Top {k} by {label}", ["rank", "node", "score"], rows, text)


def top_tags(ds: Dataset, k: int) -> Section:
    """Tags ranked by question count descending, ties alphabetical."""
    counts: dict[str, int] = {}
    for q in ds.questions():
        for tag in q.tags:
            counts[tag] = counts.get(tag, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    rows = [[str(rank), tag, str(count)]
            for rank, (tag, count) in enumerate(ranked, start=1)]
    return Section(f"Top {k} tags", ["rank", "tag", "questions"], rows)


def unanswered_by_tag(ds: Dataset, k: int) -> Section:
    """Tags ranked by count of questions that received no answer."""
    answered = {a.parent_id for a in ds.answers()}
    counts: dict[str, int] = {}
    for q in ds.questions():
        if q.post_id in answered:
            continue
        for tag in q.tags:
            counts[tag] = counts.get(tag, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    rows = [[str(rank), tag, str(count)]
            for rank, (tag, count) in enumerate(ranked, start=1)]
    return Section(f"Top {k} tags by unanswered questions",
                   ["rank", "tag", "unanswered"], rows)


def users_answering_in_tag(ds: Dataset, tag: str, k: int) -> Section:
    """Users ranked by answers to questions carrying the tag; self-answers count."""
    tagged = {q.post_id for q in ds.questions() if tag in q.tags}
    counts: dict[int, int] = {}
    for a in ds.answers():
        if a.parent_id in tagged and a.owner_user_id is not None:
            counts[a.owner_user_id] = counts.get(a.owner_user_id, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    rows = [[str(rank), str(user), str(count)]
            for rank, (user, count) in enumerate(ranked, start=1)]
    return Section(f"Top {k} users answering in tag '{tag}'",
                   ["rank", "user", "answers"], rows)


def degree_distribution(graph: Graph) -> Section:
    """Histogram rows (degree, node count), ascending degree."""
    counts: dict[int, int] = {}
    for v in graph.node_ids():
        d = graph.degree(v)
        counts[d] = counts.get(d, 0) + 1
    rows = [[str(d), str(counts[d])] for d in sorted(counts)]
    return Section("Degree distribution", ["degree", "nodes"], rows)


# -- rendering ------------------------------------------------------------------

def render(report: Report, format: str = "text") -> bytes:
    """Serialize a report; byte-deterministic for identical content."""
    if format == "text":
        return _render_text(report)
    if format == "json":
        return _render_json(report)
    if format == "csv":
        return _render_csv(report)
    raise DomainError(f"unknown report format {format!r}")


def _render_text(report: Report) -> bytes:
    out = [f"== {report.title} =="]
    out.append(f"generated-at: {report.generated_at}")
    out.append(f"input-fingerprint: {report.input_fingerprint}")
    for key in sorted(report.parameters):
        out.append(f"param: {key}={report.parameters[key]}")
    for section in report.sections:
        out.append("")
        out.append(f"-- {section.heading} --")
        if section.text:
            out.append(section.text)
        out.append(" | ".join(section.header))
        for row in section.rows:
            out.append(" | ".join(row))
    return ("\n".join(out) + "\n").encode("utf-8")


def _render_json(report: Report) -> bytes:
    payload = {
        "title": report.title,
        "generated_at": report.generated_at,
        "input_fingerprint": report.input_fingerprint,
        "parameters": dict(sorted(report.parameters.items())),
        "sections": [
            {"heading": s.heading, "text": s.text, "header": s.header, "rows": s.rows}
            for s in report.sections
        ],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _render_csv(report: Report) -> bytes:
    buf = io.StringIO()
    buf.write(f"# title={report.title}\n")
    buf.write(f"# generated-at={report.generated_at}\n")
    buf.write(f"# input-fingerprint={report.input_fingerprint}\n")
    for key in sorted(report.parameters):
        buf.write(f"# param {key}={report.parameters[key]}\n")
    writer = csv.writer(buf, lineterminator="\n")
    for section in report.sections:
        buf.write(f"# section={section.heading}\n")
        if section.text:
            buf.write(f"# {section.text}\n")
        writer.writerow(section.header)
        writer.writerows(section.rows)
    return buf.getvalue().encode("utf-8")


# -- graph exports ----------------------------------------------------------------

def graph_to_text(graph: Graph, format: str,
                  header_comments: list[str] | None = None) -> str:
    """Serialize the graph as graphml, dot, or edgelist text. Node ids, kinds,
    and edge weights are preserved; element order is ascending ids /
    insertion-order edges. Optional comments use the format's comment syntax."""
    comments = header_comments or []
    if format == "graphml":
        return _graphml(graph, comments)
    if format == "dot":
        return _dot(graph, comments)
    if format == "edgelist":
        return _edgelist(graph, comments)
    raise DomainError(f"unknown export format {format!r}")


def export_graph(graph: Graph, path, format: str,
                 header_comments: list[str] | None = None) -> None:
    """Write graph_to_text output to a file."""
    content = graph_to_text(graph, format, header_comments)
    try:
        Path(path).write_text(content, encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot write {path}: {exc}") from exc


def _graphml(graph: Graph, comments: list[str]) -> str:
    attr_keys = sorted({k for v in graph.node_ids() for k in graph.attrs(v)})
    lines = ['<?xml version="1.0" encoding="UTF-8"?>']
    for comment in comments:
        lines.append(f"<!-- {escape(comment)} -->")
    lines.append(
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns"'
        ' xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance"'
        ' xsi:schemaLocation="http://graphml.graphdrawing.org/xmlns'
        ' http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd">')
    lines.append('  <key id="kind" for="node" attr.name="kind" attr.type="string"/>')
    for key in attr_keys:
        lines.append(f'  <key id="attr_{escape(key)}" for="node"'
                     f' attr.name={quoteattr(key)} attr.type="string"/>')
    lines.append('  <key id="weight" for="edge" attr.name="weight" attr.type="double"/>')
    lines.append('  <key id="ekind" for="edge" attr.name="kind" attr.type="string"/>')
    default = "directed" if graph.directed else "undirected"
    lines.append(f'  <graph id="G" edgedefault="{default}">')
    for v in graph.node_ids():
        attrs = graph.attrs(v)
        lines.append(f'    <node id="{v}">')
        lines.append(f'      <data key="kind">{escape(graph.kind(v).value)}</data>')
        for key in sorted(attrs):
            lines.append(f'      <data key="attr_{escape(key)}">{escape(attrs[key])}</data>')
        lines.append("    </node>")
    for e in graph.edges():
        lines.append(f'    <edge source="{e.src}" target="{e.dst}">')
        lines.append(f'      <data key="weight">{e.weight!r}</data>')
        lines.append(f'      <data key="ekind">{escape(e.kind.value)}</data>')
        lines.append("    </edge>")
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def _dot(graph: Graph, comments: list[str]) -> str:
    lines = [f"// {c}" for c in comments]
    arrow = "->" if graph.directed else "--"
    lines.append("digraph G {" if graph.directed else "graph G {")
    for v in graph.node_ids():
        lines.append(f'  {v} [kind="{graph.kind(v).value}"];')
    for e in graph.edges():
        lines.append(
            f'  {e.src} {arrow} {e.dst} [weight={e.weight!r}, kind="{e.kind.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _edgelist(graph: Graph, comments: list[str]) -> str:
    # isolated nodes are not representable in this format
    lines = [f"# {c}" for c in comments]
    for e in graph.edges():
        lines.append(f"{e.src} {e.dst} {e.weight!r}")
    return "\n".join(lines) + "\n"
