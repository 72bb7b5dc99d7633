"""File-based dataset ingestion: Q&A post dumps (CSV or XML) and edge lists.

Malformed rows are quarantined with their line numbers rather than aborting
the parse; a file where more than half the rows fail is rejected outright as
a format mismatch. Answers whose parent question is missing from the same
file are quarantined in a resolution pass after parsing.
"""

from __future__ import annotations

import csv
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import DataError, FormatMismatchError, ParseError
from .graph import EdgeKind, Graph, NodeKind

CSV_HEADER = ["post_id", "post_type", "parent_id", "owner_user_id", "tags", "accepted"]
_TAG_RE = re.compile(r"<([^<>]+)>")
_TRUE_WORDS = {"1", "true", "yes"}
_FALSE_WORDS = {"", "0", "false", "no"}


class PostType(Enum):
    QUESTION = "question"
    ANSWER = "answer"


@dataclass
class PostRecord:
    post_id: int
    post_type: PostType
    parent_id: int | None
    owner_user_id: int | None
    tags: tuple[str, ...]
    accepted: bool
    creation_order: int


@dataclass
class QuarantinedRow:
    line: int
    reason: str
    raw: str


@dataclass
class Provenance:
    path: str
    format: str


@dataclass
class Dataset:
    posts: list[PostRecord]
    users: set[int]
    provenance: Provenance
    quarantined: list[QuarantinedRow] = field(default_factory=list)

    def questions(self) -> list[PostRecord]:
        return [p for p in self.posts if p.post_type is PostType.QUESTION]

    def answers(self) -> list[PostRecord]:
        return [p for p in self.posts if p.post_type is PostType.ANSWER]


def parse_posts(path, format: str) -> Dataset:
    """Parse a posts file into a Dataset. ``format`` is "csv" or "xml"
    (alias "xml-dump"). Order-preserving; see module docstring for the
    quarantine rules."""
    fmt = format.lower()
    text_path = Path(path)
    try:
        raw = text_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {text_path}: {exc}") from exc
    if fmt == "csv":
        rows, quarantined = _parse_csv(raw)
    elif fmt in ("xml", "xml-dump"):
        rows, quarantined = _parse_xml(raw)
    else:
        raise DataError(f"unknown posts format {format!r}")
    attempted = len(rows) + len(quarantined)
    if attempted > 0 and len(quarantined) / attempted > 0.5:
        raise FormatMismatchError(
            f"{len(quarantined)} of {attempted} rows malformed; "
            f"file does not look like {fmt} posts data")
    posts, quarantined = _resolve_parents(rows, quarantined)
    users = {p.owner_user_id for p in posts if p.owner_user_id is not None}
    return Dataset(posts, users, Provenance(str(text_path), fmt), quarantined)


def _resolve_parents(rows, quarantined):
    question_ids = {r.post_id for r, _, _ in rows if r.post_type is PostType.QUESTION}
    posts = []
    for record, line, raw in rows:
        if record.post_type is PostType.ANSWER and record.parent_id not in question_ids:
            quarantined.append(QuarantinedRow(
                line, f"answer parent {record.parent_id} matches no question", raw))
            continue
        posts.append(record)
    posts = [
        PostRecord(p.post_id, p.post_type, p.parent_id, p.owner_user_id,
                   p.tags, p.accepted, order)
        for order, p in enumerate(posts)
    ]
    return posts, quarantined


def _parse_csv(raw: str):
    stripped = raw.strip()
    if not stripped:
        return [], []
    lines = raw.splitlines()
    reader = csv.reader(lines)
    header = next(reader)
    if [h.strip() for h in header] != CSV_HEADER:
        raise FormatMismatchError(
            f"expected header {','.join(CSV_HEADER)!r}, got {','.join(header)!r}")
    rows = []
    quarantined = []
    for line_no, fields in enumerate(reader, start=2):
        raw_line = lines[line_no - 1] if line_no - 1 < len(lines) else ""
        if not fields or all(not f.strip() for f in fields):
            continue
        try:
            record = _csv_record(fields)
        except ValueError as exc:
            quarantined.append(QuarantinedRow(line_no, str(exc), raw_line))
            continue
        rows.append((record, line_no, raw_line))
    return rows, quarantined


def _csv_record(fields) -> PostRecord:
    if len(fields) != len(CSV_HEADER):
        raise ValueError(f"expected {len(CSV_HEADER)} columns, got {len(fields)}")
    post_id = _req_id(fields[0], "post_id")
    type_word = fields[1].strip().lower()
    if type_word not in ("question", "answer"):
        raise ValueError(f"post_type must be question or answer, got {fields[1]!r}")
    post_type = PostType.QUESTION if type_word == "question" else PostType.ANSWER
    parent_id = _opt_id(fields[2], "parent_id")
    owner = _opt_id(fields[3], "owner_user_id")
    if post_type is PostType.QUESTION and parent_id is not None:
        raise ValueError("question rows must not carry parent_id")
    if post_type is PostType.ANSWER and parent_id is None:
        raise ValueError("answer rows must carry parent_id")
    tags = _normalize_tags(fields[4].split("|")) if post_type is PostType.QUESTION else ()
    accepted_word = fields[5].strip().lower()
    if accepted_word in _TRUE_WORDS:
        accepted = True
    elif accepted_word in _FALSE_WORDS:
        accepted = False
    else:
        raise ValueError(f"accepted must be boolean-like, got {fields[5]!r}")
    return PostRecord(post_id, post_type, parent_id, owner, tags, accepted, 0)


def _parse_xml(raw: str):
    if not raw.strip():
        return [], []
    try:
        root = ET.fromstring(raw)
    except ET.ParseError as exc:
        raise FormatMismatchError(f"not well-formed XML: {exc}") from exc
    rows = []
    quarantined = []
    accepted_ids = set()
    row_no = 0
    for elem in root.iter("row"):
        row_no += 1
        type_id = elem.get("PostTypeId")
        if type_id not in ("1", "2"):
            continue  # other row kinds (wiki, moderation) are out of scope
        raw_attr = str(dict(elem.attrib))
        try:
            post_id = _req_id(elem.get("Id", ""), "Id")
            parent_id = _opt_id(elem.get("ParentId", ""), "ParentId")
            owner = _opt_id(elem.get("OwnerUserId", ""), "OwnerUserId")
            if type_id == "1":
                if parent_id is not None:
                    raise ValueError("question rows must not carry ParentId")
                post_type = PostType.QUESTION
                tags = _normalize_tags(_TAG_RE.findall(elem.get("Tags", "")))
                accepted_attr = _opt_id(elem.get("AcceptedAnswerId", ""), "AcceptedAnswerId")
                accepted = accepted_attr is not None
                if accepted_attr is not None:
                    accepted_ids.add(accepted_attr)
            else:
                if parent_id is None:
                    raise ValueError("answer rows must carry ParentId")
                post_type = PostType.ANSWER
                tags = ()
                accepted = False
            record = PostRecord(post_id, post_type, parent_id, owner, tags, accepted, 0)
        except ValueError as exc:
            quarantined.append(QuarantinedRow(row_no, str(exc), raw_attr))
            continue
        rows.append((record, row_no, raw_attr))
    rows = [
        (PostRecord(r.post_id, r.post_type, r.parent_id, r.owner_user_id, r.tags,
                    True if (r.post_type is PostType.ANSWER and r.post_id in accepted_ids)
                    else r.accepted, 0), line, raw_attr)
        for r, line, raw_attr in rows
    ]
    return rows, quarantined


def _req_id(text: str, name: str) -> int:
    value = _opt_id(text, name)
    if value is None:
        raise ValueError(f"{name} is required")
    return value


def _opt_id(text: str, name: str) -> int | None:
    word = text.strip()
    if not word:
        return None
    try:
        value = int(word)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {text!r}") from None
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


def _normalize_tags(parts) -> tuple[str, ...]:
    tags = []
    for part in parts:
        tag = part.strip().lower()
        if not tag:
            continue
        if any(ch.isspace() for ch in tag):
            raise ValueError(f"tag {part!r} contains whitespace")
        if tag not in tags:
            tags.append(tag)
    return tuple(tags)


# -- graph construction -------------------------------------------------------

def build_user_interaction_graph(ds: Dataset) -> Graph:
    """Directed user graph: one answerer->asker edge per answer; posts with
    missing owners contribute no node or edge; self-answers keep their loop."""
    g = Graph(directed=True)
    for user in sorted(ds.users):
        g.add_node(user, NodeKind.USER)
    asker = {q.post_id: q.owner_user_id for q in ds.questions()}
    for answer in ds.answers():
        if answer.owner_user_id is None:
            continue
        owner = asker.get(answer.parent_id)
        if owner is None:
            continue
        g.add_edge(answer.owner_user_id, owner, EdgeKind.ANSWERED)
    return g


def build_tag_cooccurrence_graph(ds: Dataset) -> Graph:
    """Undirected tag graph: each question adds +1 weight on the single edge
    of every unordered pair of its tags. Tag ids follow alphabetical order;
    the tag string rides on the node's "label" attribute."""
    tags = sorted({t for q in ds.questions() for t in q.tags})
    index = {t: i for i, t in enumerate(tags)}
    g = Graph(directed=False)
    for tag in tags:
        g.add_node(index[tag], NodeKind.TAG, attrs={"label": tag})
    weights: dict[tuple[int, int], float] = {}
    for q in ds.questions():
        ids = sorted(index[t] for t in q.tags)
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                key = (ids[i], ids[j])
                weights[key] = weights.get(key, 0.0) + 1.0
    for (u, v), w in sorted(weights.items()):
        g.add_edge(u, v, EdgeKind.COOCCURS, weight=w)
    return g


def load_edge_list(path, directed: bool = False) -> Graph:
    """SNAP-style edge list: whitespace-separated ``src dst [weight]`` lines,
    '#' comments and blank lines skipped. Nodes are created as Generic."""
    text_path = Path(path)
    try:
        raw = text_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {text_path}: {exc}") from exc
    g = Graph(directed=directed)
    pending: list[tuple[int, int, float]] = []
    for line_no, line in enumerate(raw.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        tokens = body.split()
        if len(tokens) not in (2, 3):
            raise ParseError(f"expected 'src dst [weight]', got {line!r}", line=line_no)
        try:
            src = int(tokens[0])
            dst = int(tokens[1])
        except ValueError:
            raise ParseError(f"non-numeric node id in {line!r}", line=line_no) from None
        if src < 0 or dst < 0:
            raise ParseError(f"node ids must be nonnegative in {line!r}", line=line_no)
        weight = 1.0
        if len(tokens) == 3:
            try:
                weight = float(tokens[2])
            except ValueError:
                raise ParseError(f"non-numeric weight in {line!r}", line=line_no) from None
            if not weight > 0:
                raise ParseError(f"weight must be positive in {line!r}", line=line_no)
        pending.append((src, dst, weight))
    for src, dst, _ in pending:
        if not g.has_node(src):
            g.add_node(src, NodeKind.GENERIC)
        if not g.has_node(dst):
            g.add_node(dst, NodeKind.GENERIC)
    for src, dst, weight in pending:
        g.add_edge(src, dst, EdgeKind.GENERIC, weight=weight)
    return g
