import json
from pathlib import Path

import pytest

from qagraph.cli import run

DATA = Path(__file__).parent / "data"
FIXTURE = str(DATA / "posts_fixture.csv")
REPORTS = str(DATA / "posts_reports.csv")


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- exit codes ------------------------------------------------------------------

def test_no_subcommand_usage_error(capsys):
    code, _, err = invoke(capsys)
    assert code == 1
    assert "subcommand" in err


def test_unknown_measure_lists_choices(capsys):
    code, _, err = invoke(capsys, "analyze", "--input", FIXTURE,
                          "--measure", "nonsense")
    assert code == 1
    assert "degree" in err and "pagerank" in err


def test_missing_input_file_exit_2(capsys):
    code, _, err = invoke(capsys, "analyze", "--input", "/no/such/file.csv",
                          "--measure", "degree")
    assert code == 2
    assert "/no/such/file.csv" in err


def test_computation_error_exit_3(tmp_path, capsys):
    edges = tmp_path / "g.txt"
    edges.write_text("0 1\n2 3\n")  # disconnected
    code, _, err = invoke(capsys, "spectral", "fiedler", "--input", str(edges))
    assert code == 3
    assert "disconnected" in err


def test_missing_required_flag_exit_1(capsys):
    code, _, err = invoke(capsys, "community", "--input", FIXTURE)
    assert code == 1


# -- analyze -----------------------------------------------------------------------

def test_analyze_degree_paper_format(capsys):
    code, out, _ = invoke(capsys, "analyze", "--input", FIXTURE,
                          "--graph", "user-interaction", "--measure", "degree",
                          "--top", "5", "--fixed-timestamp")
    assert code == 0
    assert "The top 5 nodes with the highest degree centrality are: 10, 20, 30" in out


def test_analyze_writes_output_file(tmp_path, capsys):
    code, out, _ = invoke(capsys, "analyze", "--input", FIXTURE,
                          "--measure", "degree", "--fixed-timestamp",
                          "--output-dir", str(tmp_path), "--out", "report.txt")
    assert code == 0
    assert out == ""
    content = (tmp_path / "report.txt").read_text()
    assert "degree centrality" in content
    assert "input_fingerprint" in content


def test_analyze_diameter_and_path(tmp_path, capsys):
    edges = tmp_path / "p4.txt"
    edges.write_text("0 1\n1 2\n2 3\n")
    code, out, _ = invoke(capsys, "analyze", "--input", str(edges),
                          "--diameter", "--path", "0", "3", "--fixed-timestamp")
    assert code == 0
    assert "The shortest path is from node 0 to node 3." in out
    assert "0->1->2->3" in out


def test_analyze_scores_csv(tmp_path, capsys):
    code, _, _ = invoke(capsys, "analyze", "--input", FIXTURE,
                        "--measure", "pagerank", "--output-dir", str(tmp_path),
                        "--out", "r.txt", "--scores-csv", "scores.csv")
    assert code == 0
    lines = (tmp_path / "scores.csv").read_text().splitlines()
    data = [l for l in lines if not l.startswith("#")]
    assert data[0] == "node_id,score"
    assert len(data) == 4
    assert any("damping=0.85" in l for l in lines)


def test_analyze_requires_some_action(capsys):
    code, _, err = invoke(capsys, "analyze", "--input", FIXTURE)
    assert code == 1
    assert "--measure" in err


# -- community -----------------------------------------------------------------------

def test_community_louvain_partition_csv(tmp_path, capsys):
    edges = tmp_path / "barbell.txt"
    edges.write_text("0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3\n")
    code, out, _ = invoke(capsys, "community", "--input", str(edges),
                          "--algorithm", "louvain", "--seed", "42")
    assert code == 0
    assert "# modularity=" in out
    rows = [l for l in out.splitlines() if "," in l and not l.startswith("#")]
    assert rows[0] == "node_id,community"
    assignment = {int(a): int(b) for a, b in
                  (r.split(",") for r in rows[1:])}
    assert assignment == {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1}
    assert "# seed=42" in out


def test_community_girvan_newman_dendrogram(tmp_path, capsys):
    edges = tmp_path / "barbell.txt"
    edges.write_text("0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3\n")
    code, _, _ = invoke(capsys, "community", "--input", str(edges),
                        "--algorithm", "girvan-newman", "--target", "2",
                        "--output-dir", str(tmp_path),
                        "--out", "part.csv", "--dendrogram", "steps.json")
    assert code == 0
    payload = json.loads((tmp_path / "steps.json").read_text())
    assert payload["steps"][0]["removed_edge"] == [2, 3]
    assert "_provenance" in payload


def test_community_lpa(tmp_path, capsys):
    edges = tmp_path / "k4.txt"
    edges.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = invoke(capsys, "community", "--input", str(edges),
                          "--algorithm", "lpa", "--seed", "7")
    assert code == 0
    rows = [l for l in out.splitlines() if not l.startswith("#")][1:]
    labels = {int(r.split(",")[1]) for r in rows}
    assert labels == {0}


# -- linkpred ------------------------------------------------------------------------

def test_linkpred_jaccard(tmp_path, capsys):
    edges = tmp_path / "p4.txt"
    edges.write_text("0 1\n1 2\n2 3\n")
    code, out, _ = invoke(capsys, "linkpred", "--input", str(edges),
                          "--metric", "jaccard", "--node", "0", "--top", "3")
    assert code == 0
    data = [l for l in out.splitlines() if not l.startswith("#")]
    assert data[0] == "u,v,score"
    assert data[1] == "0,2,0.5"


# -- spectral -------------------------------------------------------------------------

def test_spectral_embed_k16(tmp_path, capsys):
    edges = tmp_path / "c6.txt"
    edges.write_text("".join(f"{i} {(i + 1) % 6}\n" for i in range(6)))
    code, out, _ = invoke(capsys, "spectral", "embed", "--input", str(edges),
                          "--k", "16")
    assert code == 0
    data = [l for l in out.splitlines() if not l.startswith("#")]
    assert data[0] == "position,eigenvalue"
    assert len(data) == 17
    assert "# k=16" in out


def test_spectral_matrix_dense_and_coo(tmp_path, capsys):
    edges = tmp_path / "k2.txt"
    edges.write_text("0 1\n")
    code, out, _ = invoke(capsys, "spectral", "matrix", "--input", str(edges),
                          "--matrix", "laplacian")
    assert code == 0
    data = [l for l in out.splitlines() if not l.startswith("#")]
    assert data == ["1 -1", "-1 1"]
    code, out, _ = invoke(capsys, "spectral", "matrix", "--input", str(edges),
                          "--matrix", "laplacian", "--layout", "coo")
    data = [l for l in out.splitlines() if not l.startswith("#")]
    assert data == ["0 0 1", "0 1 -1", "1 0 -1", "1 1 1"]


def test_spectral_connectivity(tmp_path, capsys):
    edges = tmp_path / "k2.txt"
    edges.write_text("0 1\n")
    code, out, _ = invoke(capsys, "spectral", "connectivity", "--input", str(edges))
    assert code == 0
    assert "algebraic_connectivity=2.0" in out


def test_spectral_ordering_cli(tmp_path, capsys):
    edges = tmp_path / "p3.txt"
    edges.write_text("5 9\n9 11\n")
    code, out, _ = invoke(capsys, "spectral", "ordering", "--input", str(edges))
    assert code == 0
    data = [l for l in out.splitlines() if not l.startswith("#")]
    ranks = [int(r.split(",")[1]) for r in data[1:]]
    assert ranks in ([5, 9, 11], [11, 9, 5])


def test_spectral_classify(tmp_path, capsys):
    train = tmp_path / "train"
    for size in (6, 8, 10):
        cyc = train / "cycle"
        star = train / "star"
        cyc.mkdir(parents=True, exist_ok=True)
        star.mkdir(parents=True, exist_ok=True)
        (cyc / f"c{size}.txt").write_text(
            "".join(f"{i} {(i + 1) % size}\n" for i in range(size)))
        (star / f"s{size}.txt").write_text(
            "".join(f"0 {i}\n" for i in range(1, size)))
    test_file = tmp_path / "c12.txt"
    test_file.write_text("".join(f"{i} {(i + 1) % 12}\n" for i in range(12)))
    code, out, _ = invoke(capsys, "spectral", "classify", "--train", str(train),
                          "--test", str(test_file), "--k", "8")
    assert code == 0
    data = [l for l in out.splitlines() if not l.startswith("#")]
    assert data == ["graph,label", "c12.txt,cycle"]


# -- sample ----------------------------------------------------------------------------

def test_sample_random_deterministic(tmp_path, capsys):
    edges = tmp_path / "g.txt"
    edges.write_text("".join(f"{i} {i + 1}\n" for i in range(20)))
    code, out1, _ = invoke(capsys, "sample", "--input", str(edges),
                           "--method", "random", "--count", "8", "--seed", "3")
    assert code == 0
    code, out2, _ = invoke(capsys, "sample", "--input", str(edges),
                           "--method", "random", "--count", "8", "--seed", "3")
    assert out1 == out2
    assert "# seed=3" in out1


def test_sample_snowball(tmp_path, capsys):
    edges = tmp_path / "p5.txt"
    edges.write_text("0 1\n1 2\n2 3\n3 4\n")
    code, out, _ = invoke(capsys, "sample", "--input", str(edges),
                          "--method", "snowball", "--seeds", "0", "--depth", "1")
    assert code == 0
    data = [l for l in out.splitlines() if not l.startswith("#")]
    assert data == ["0 1 1.0"]


def test_sample_stratified_usage_error_without_strata(capsys):
    code, _, err = invoke(capsys, "sample", "--input", FIXTURE,
                          "--method", "stratified")
    assert code == 1
    assert "strata" in err


# -- report ----------------------------------------------------------------------------

def test_report_top_tags(capsys):
    code, out, _ = invoke(capsys, "report", "--input", REPORTS,
                          "--query", "top-tags", "--top", "2", "--fixed-timestamp")
    assert code == 0
    assert "neo4j" in out and "cypher" in out
    assert "x" not in [l.split(" | ")[1] for l in out.splitlines()
                       if " | " in l and not l.startswith("--")]


def test_report_unanswered(capsys):
    code, out, _ = invoke(capsys, "report", "--input", REPORTS,
                          "--query", "unanswered", "--top", "10")
    assert code == 0
    first_data = [l for l in out.splitlines() if l.startswith("1 | ")]
    assert first_data[0].startswith("1 | x | 2")


def test_report_users_in_tag_requires_tag(capsys):
    code, _, err = invoke(capsys, "report", "--input", REPORTS,
                          "--query", "users-in-tag")
    assert code == 1
    assert "--tag" in err


def test_report_users_in_tag(capsys):
    code, out, _ = invoke(capsys, "report", "--input", REPORTS,
                          "--query", "users-in-tag", "--tag", "neo4j")
    assert code == 0
    assert "1 | 20 | 2" in out
    assert "2 | 30 | 1" in out


# -- export ----------------------------------------------------------------------------

def test_export_graphml_and_reload_edgelist(tmp_path, capsys):
    edges = tmp_path / "g.txt"
    edges.write_text("1 2 1.5\n2 3 1.0\n")
    code, _, _ = invoke(capsys, "export", "--input", str(edges), "--to", "graphml",
                        "--output-dir", str(tmp_path), "--out", "g.graphml")
    assert code == 0
    text = (tmp_path / "g.graphml").read_text()
    assert "graphml" in text and "<!--" in text
    code, _, _ = invoke(capsys, "export", "--input", str(edges), "--to", "edgelist",
                        "--output-dir", str(tmp_path), "--out", "g2.txt")
    assert code == 0
    from qagraph import load_edge_list
    assert load_edge_list(tmp_path / "g2.txt") == load_edge_list(edges)


def test_export_dot_to_stdout(tmp_path, capsys):
    edges = tmp_path / "g.txt"
    edges.write_text("1 2\n")
    code, out, _ = invoke(capsys, "export", "--input", str(edges), "--to", "dot")
    assert code == 0
    assert "1 -- 2" in out
    assert out.startswith("// command=export")


# -- config file --------------------------------------------------------------------------

def test_config_file_precedence(tmp_path, capsys):
    config = tmp_path / "qagraph.conf"
    config.write_text("# comment\ntop = 2\nfixed-timestamp = true\n")
    code, out, _ = invoke(capsys, "report", "--input", REPORTS,
                          "--query", "top-tags", "--config", str(config))
    assert code == 0
    assert "generated-at: 1970-01-01T00:00:00Z" in out  # config applied
    data = [l for l in out.splitlines() if l.startswith(("1 | ", "2 | ", "3 | "))]
    assert len(data) == 2  # top=2 from config
    # explicit flag beats config
    code, out, _ = invoke(capsys, "report", "--input", REPORTS,
                          "--query", "top-tags", "--config", str(config),
                          "--top", "3")
    data = [l for l in out.splitlines() if l.startswith(("1 | ", "2 | ", "3 | "))]
    assert len(data) == 3


def test_env_var_output_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QAGRAPH_OUTPUT_DIR", str(tmp_path))
    code, _, _ = invoke(capsys, "report", "--input", REPORTS,
                        "--query", "top-tags", "--fixed-timestamp",
                        "--out", "tags.txt")
    assert code == 0
    assert (tmp_path / "tags.txt").exists()


# -- determinism ---------------------------------------------------------------------------

def test_seeded_pipeline_rerun_byte_identical(tmp_path, capsys):
    edges = tmp_path / "g.txt"
    edges.write_text("".join(f"{i} {(i + 3) % 17}\n" for i in range(17)))
    outs = []
    for run_dir in ("a", "b"):
        d = tmp_path / run_dir
        d.mkdir()
        invoke(capsys, "community", "--input", str(edges), "--algorithm", "lpa",
               "--seed", "11", "--output-dir", str(d), "--out", "part.csv")
        invoke(capsys, "analyze", "--input", str(edges), "--measure", "betweenness",
               "--fixed-timestamp", "--output-dir", str(d), "--out", "rep.txt")
        outs.append(((d / "part.csv").read_bytes(), (d / "rep.txt").read_bytes()))
    assert outs[0] == outs[1]
