"""CLI subcommands: round trips, formats, exit codes."""

import json

import pytest

from closegraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "path:3")
    assert code == 0
    assert out == "3 2\n0 1\n1 2\n"


def test_gen_closeness_round_trip(tmp_path, capsys):
    path = tmp_path / "lollipop.edges"
    code, _, _ = run(capsys, "gen", "lollipop:3,2", "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "closeness", "-i", str(path))
    assert code == 0
    assert "total: 7/2^0  (= 7)" in out


def test_gen_file_matches_in_memory(tmp_path, capsys):
    from closegraph.generators import parse_family_spec, generate
    from closegraph.graph import graph_closeness, parse_edgelist

    for text in ("path:7", "cycle:6", "star:5", "complete:4",
                 "lollipop:4,3", "tadpole:5,2", "broom:3,4", "bistar:4,3"):
        path = tmp_path / "g.edges"
        code, _, _ = run(capsys, "gen", text, "-o", str(path))
        assert code == 0
        from_file = graph_closeness(parse_edgelist(path.read_text())).total
        in_memory = graph_closeness(generate(parse_family_spec(text))).total
        assert from_file == in_memory


def test_closeness_per_vertex_json(tmp_path, capsys):
    path = tmp_path / "p3.edges"
    run(capsys, "gen", "path:3", "-o", str(path))
    code, out, _ = run(
        capsys, "closeness", "-i", str(path), "--per-vertex", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == "5/2^1"
    assert payload["per_vertex"][1]["closeness"] == "1/2^0"
    # edge-list files carry no labels, so parsed graphs use the index
    assert payload["per_vertex"][0]["label"] == "0"


def test_closeness_csv(tmp_path, capsys):
    path = tmp_path / "p2.edges"
    run(capsys, "gen", "path:2", "-o", str(path))
    code, out, _ = run(capsys, "closeness", "-i", str(path), "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["vertex,label,closeness", "total,,1/2^0"]


def test_transform_line_golden_value(tmp_path, capsys):
    # triangle with a pendant edge; its line graph has closeness 11/2
    src = tmp_path / "k3b.edges"
    src.write_text("4 4\n0 1\n0 2\n1 2\n2 3\n")
    out_path = tmp_path / "line.edges"
    code, _, _ = run(capsys, "transform", "line", "-i", str(src), "-o", str(out_path))
    assert code == 0
    code, out, _ = run(capsys, "closeness", "-i", str(out_path))
    assert code == 0
    assert "total: 11/2^1  (= 5.5)" in out
    origins = json.loads((tmp_path / "line.edges.origins.json").read_text())
    assert origins == [["edge", [0, 1]], ["edge", [0, 2]], ["edge", [1, 2]], ["edge", [2, 3]]]


def test_transform_shadow(tmp_path, capsys):
    src = tmp_path / "p5.edges"
    run(capsys, "gen", "path:5", "-o", str(src))
    out_path = tmp_path / "shadow.edges"
    code, _, _ = run(capsys, "transform", "shadow", "-i", str(src), "-o", str(out_path))
    assert code == 0
    assert out_path.read_text().splitlines()[0] == "10 16"
    code, out, _ = run(capsys, "closeness", "-i", str(out_path))
    assert "total: 27/2^0  (= 27)" in out


def test_transform_bridge_join(tmp_path, capsys):
    left = tmp_path / "k3.edges"
    right = tmp_path / "p2.edges"
    run(capsys, "gen", "complete:3", "-o", str(left))
    run(capsys, "gen", "path:2", "-o", str(right))
    out_path = tmp_path / "joined.edges"
    code, _, _ = run(
        capsys, "transform", "bridge-join",
        "-i", str(left), "-p", "0", "-j", str(right), "-q", "0", "-o", str(out_path),
    )
    assert code == 0
    code, out, _ = run(capsys, "closeness", "-i", str(out_path))
    assert "total: 7/2^0" in out


def test_transform_coalesce(tmp_path, capsys):
    left = tmp_path / "a.edges"
    right = tmp_path / "b.edges"
    run(capsys, "gen", "path:2", "-o", str(left))
    run(capsys, "gen", "path:2", "-o", str(right))
    out_path = tmp_path / "merged.edges"
    code, _, _ = run(
        capsys, "transform", "coalesce",
        "-i", str(left), "-p", "0", "-j", str(right), "-q", "0", "-o", str(out_path),
    )
    assert code == 0
    assert out_path.read_text().splitlines()[0] == "3 2"


def test_gen_dot_format(capsys):
    code, out, _ = run(capsys, "gen", "star:3", "-f", "dot")
    assert code == 0
    assert out.startswith("graph G {")
    assert 'label="S:0"' in out


def test_vuln_text_and_json(tmp_path, capsys):
    src = tmp_path / "c3.edges"
    run(capsys, "gen", "cycle:3", "-o", str(src))
    code, out, _ = run(capsys, "vuln", "link", "-i", str(src))
    assert code == 0
    assert "value:     5/2^1  (= 2.5)" in out
    assert "witnesses: (0,1) (0,2) (1,2)" in out
    code, out, _ = run(capsys, "vuln", "vertex", "-i", str(src), "--format", "json")
    payload = json.loads(out)
    assert payload["measure"] == "vertex_residual"
    assert payload["value"] == "1/2^0"


def test_verify_small_window(tmp_path, capsys):
    out_dir = tmp_path / "records"
    code, out, _ = run(
        capsys, "verify", "--all",
        "--window", "basic=8,complete=5,m=4,n=3,bistar_n=4,bridged=6,"
        "shadow_cases=5,shadow_order=6,pairs=5,pair_order=5",
        "-o", str(out_dir),
    )
    assert code == 0
    assert "0 failed" in out
    assert (out_dir / "records.csv").exists()
    assert (out_dir / "records.json").exists()


def test_verify_family_filter(tmp_path, capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "star",
        "--window", "basic=6,bridged=4", "-o", str(tmp_path),
    )
    assert code == 0
    rows = (tmp_path / "records.csv").read_text().splitlines()[1:]
    assert rows and all(row.split(",")[0].split(":")[0].endswith(("star", "star_leaf", "star_center")) for row in rows)


def test_verify_failure_exits_1(tmp_path, capsys, monkeypatch):
    from closegraph.dyadic import Dyadic
    from closegraph.verify import VerificationRecord
    import closegraph.cli as cli_module

    bad = VerificationRecord("C_path", 3, None, Dyadic(5, 1), Dyadic(2), False)
    monkeypatch.setattr(cli_module, "run_all", lambda **kw: [bad])
    code, out, err = run(capsys, "verify", "-o", str(tmp_path))
    assert code == 1
    assert "1 failed" in out
    assert "first failure: C_path p1=3" in err
    assert "5/2^1" in err
    rows = (tmp_path / "records.csv").read_text().splitlines()
    assert rows[1].endswith("false")


@pytest.mark.parametrize(
    "argv",
    [
        ("gen", "wheel:5"),
        ("gen", "cycle:2"),
        ("gen", "lollipop:3"),
        ("closeness", "-i", "/nonexistent/file"),
        ("verify", "--window", "bogus=1", "-o", "."),
        ("verify", "--family", "wheel", "-o", "."),
    ],
)
def test_validation_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error:" in err


def test_bad_graph_file_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("2 1\n0 0\n")
    code, _, err = run(capsys, "closeness", "-i", str(bad))
    assert code == 2
    assert "line 2" in err


def test_bridge_join_bad_index_exit_2(tmp_path, capsys):
    left = tmp_path / "a.edges"
    run(capsys, "gen", "path:2", "-o", str(left))
    code, _, err = run(
        capsys, "transform", "bridge-join",
        "-i", str(left), "-p", "9", "-j", str(left), "-q", "0",
        "-o", str(tmp_path / "x.edges"),
    )
    assert code == 2
    assert "out of range" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["transform"])
    assert exc.value.code == 2
