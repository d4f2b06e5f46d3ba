import io
import json
import subprocess
import sys

from rnpkit import complete, cycle, parse_graph, path, serialize_graph, star, two_triangles
from rnpkit.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def write_graph(tmp_path, name, g):
    target = tmp_path / name
    target.write_text(serialize_graph(g), encoding="ascii")
    return str(target)


class TestGen:
    def test_er_output_parses(self):
        code, text = run(["gen", "er", "--n", "10", "--p", "0.3", "--seed", "7"])
        assert code == 0
        g = parse_graph(text)
        assert g.node_count == 10

    def test_er_deterministic(self):
        _, a = run(["gen", "er", "--n", "10", "--p", "0.3", "--seed", "7"])
        _, b = run(["gen", "er", "--n", "10", "--p", "0.3", "--seed", "7"])
        assert a == b

    def test_regular(self):
        code, text = run(
            ["gen", "regular", "--n", "20", "--d", "3", "--delete", "20", "--seed", "7"]
        )
        assert code == 0
        assert parse_graph(text).edge_count == 10

    def test_prime_partite(self):
        code, text = run(["gen", "prime-partite", "--primes", "2,3,5", "--n", "12"])
        assert code == 0
        assert parse_graph(text).edge_count == 2 * 3 + 2 * 5 + 3 * 5

    def test_pattern_pair_emits_two_documents(self):
        code, text = run(["gen", "pattern", "--name", "figure2_pair"])
        assert code == 0
        first, _, second = text.partition("# --- second graph ---\n")
        assert parse_graph(first) == cycle(6)
        assert parse_graph(second) == two_triangles()

    def test_pattern_with_size(self):
        code, text = run(["gen", "pattern", "--name", "cycle", "--size", "5"])
        assert code == 0
        assert parse_graph(text) == cycle(5)

    def test_pattern_missing_size_is_user_error(self):
        code, _ = run(["gen", "pattern", "--name", "cycle"])
        assert code == 2

    def test_out_file(self, tmp_path):
        target = tmp_path / "g.txt"
        code, text = run(
            ["gen", "er", "--n", "5", "--p", "0.5", "--seed", "1", "--out", str(target)]
        )
        assert code == 0 and text == ""
        assert parse_graph(target.read_text()).node_count == 5


class TestCover:
    def test_triangle(self, tmp_path):
        graph = write_graph(tmp_path, "k3.txt", complete(3))
        code, text = run(["cover", graph])
        assert code == 0
        payload = json.loads(text)
        assert payload["radii"] == [1, 1]
        assert payload["valid"] is True
        assert sorted(payload["order"]) == [0, 1, 2]

    def test_path_four_starts_at_three(self, tmp_path):
        graph = write_graph(tmp_path, "p4.txt", path(4))
        code, text = run(["cover", graph])
        assert code == 0
        assert json.loads(text)["radii"][0] == 3

    def test_disconnected_is_user_error(self, tmp_path):
        graph = write_graph(tmp_path, "tt.txt", two_triangles())
        code, _ = run(["cover", graph])
        assert code == 2

    def test_missing_file_is_user_error(self):
        code, _ = run(["cover", "no-such-file.txt"])
        assert code == 2

    def test_malformed_file_is_user_error(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("2 1\n0 0\n")
        code, _ = run(["cover", str(bad)])
        assert code == 2


class TestCount:
    def test_triangles_in_k5(self, tmp_path):
        g = write_graph(tmp_path, "k5.txt", complete(5))
        h = write_graph(tmp_path, "k3.txt", complete(3))
        code, text = run(["count", g, h])
        assert code == 0
        assert json.loads(text)["count"] == 10

    def test_no_triangles_in_cycle(self, tmp_path):
        g = write_graph(tmp_path, "c6.txt", cycle(6))
        h = write_graph(tmp_path, "k3.txt", complete(3))
        code, text = run(["count", g, h, "--mode", "induced"])
        assert json.loads(text)["count"] == 0

    def test_noninduced_stars(self, tmp_path):
        g = write_graph(tmp_path, "k4.txt", complete(4))
        h = write_graph(tmp_path, "s3.txt", star(3))
        code, text = run(["count", g, h, "--mode", "noninduced"])
        payload = json.loads(text)
        assert payload["count"] == 4
        assert payload["mode"] == "noninduced"
        assert payload["schema"] == "rnp-kit/1"


class TestDistinguish:
    def test_figure_pair(self, tmp_path):
        a = write_graph(tmp_path, "a.txt", cycle(6))
        b = write_graph(tmp_path, "b.txt", two_triangles())
        code, text = run(["distinguish", a, b, "--radii", "1,1"])
        payload = json.loads(text)
        assert payload == {
            "schema": "rnp-kit/1",
            "rnp": True,
            "wl": False,
            "radii": [1, 1],
        }

    def test_identical_files(self, tmp_path):
        a = write_graph(tmp_path, "a.txt", cycle(6))
        code, text = run(["distinguish", a, a, "--radii", "2,1"])
        payload = json.loads(text)
        assert payload["rnp"] is False and payload["wl"] is False

    def test_triangle_versus_path(self, tmp_path):
        a = write_graph(tmp_path, "a.txt", complete(3))
        b = write_graph(tmp_path, "b.txt", path(3))
        code, text = run(["distinguish", a, b, "--radii", "1"])
        payload = json.loads(text)
        assert payload["rnp"] is True and payload["wl"] is True

    def test_bad_radii(self, tmp_path):
        a = write_graph(tmp_path, "a.txt", complete(3))
        code, _ = run(["distinguish", a, a, "--radii", "1,x"])
        assert code == 2


class TestComplexityAndEncode:
    def test_isolated_nodes_hit_bound(self, tmp_path):
        from rnpkit import Graph

        g = write_graph(tmp_path, "iso.txt", Graph.from_edges(6))
        code, text = run(["complexity", g, "--radii", "1"])
        payload = json.loads(text)
        assert payload["updates"] == payload["bound"] == 6
        assert payload["ratio"] == 1.0

    def test_updates_within_bound(self, tmp_path):
        g = write_graph(tmp_path, "c6.txt", cycle(6))
        code, text = run(["complexity", g, "--radii", "2,1"])
        payload = json.loads(text)
        assert payload["bound"] == 150
        assert payload["updates"] <= payload["bound"]

    def test_encode_payload(self, tmp_path):
        g = write_graph(tmp_path, "c6.txt", cycle(6))
        code, a = run(["encode", g, "--radii", "1,1"])
        _, b = run(["encode", g, "--radii", "1,1"])
        assert code == 0 and a == b
        payload = json.loads(a)
        assert set(payload) == {"schema", "digest", "updates", "bound"}
        assert len(payload["digest"]) == 64


def experiment_spec(tmp_path, **overrides):
    k3 = write_graph(tmp_path, "k3.txt", complete(3))
    p3 = write_graph(tmp_path, "p3.txt", path(3))
    spec = {
        "generator": {"kind": "er", "n": 8, "p": 0.35},
        "trials": 8,
        "base_seed": 0,
        "patterns": [k3, p3],
        "radii": "auto",
        "checks": ["theorem1", "theorem3"],
    }
    spec.update(overrides)
    target = tmp_path / "spec.json"
    target.write_text(json.dumps(spec))
    return str(target)


class TestExperiment:
    def test_rows_and_checks(self, tmp_path):
        import csv

        spec = experiment_spec(tmp_path)
        code, text = run(["experiment", spec])
        assert code == 0
        rows = list(csv.reader(io.StringIO(text)))
        assert len(rows) == 9
        violations = rows[0].index("theorem1_violations")
        ok = rows[0].index("theorem3_ok")
        for fields in rows[1:]:
            assert fields[violations] == "0"
            assert fields[ok] == "True"

    def test_empty_trials_emit_header_only(self, tmp_path):
        spec = experiment_spec(tmp_path, trials=0)
        code, text = run(["experiment", spec])
        assert code == 0
        assert text.count("\n") == 1 and text.startswith("trial,seed,")

    def test_unknown_field_is_user_error(self, tmp_path):
        spec = experiment_spec(tmp_path, flux_capacitor=1)
        code, _ = run(["experiment", spec])
        assert code == 2

    def test_unknown_generator_is_user_error(self, tmp_path):
        spec = experiment_spec(tmp_path, generator={"kind": "smallworld", "n": 5})
        code, _ = run(["experiment", spec])
        assert code == 2

    def test_malformed_json_is_user_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _ = run(["experiment", str(bad)])
        assert code == 2

    def test_explicit_radii(self, tmp_path):
        import csv

        spec = experiment_spec(tmp_path, radii=[2, 1], trials=3, checks=[])
        code, text = run(["experiment", spec])
        assert code == 0
        rows = list(csv.reader(io.StringIO(text)))
        assert "theorem1_violations" not in rows[0]
        radii_column = rows[0].index("radii")
        assert rows[1][radii_column] == "2,1"


class TestSubprocessDeterminism:
    def test_gen_bytes_identical_across_processes(self):
        import os

        cmd = [sys.executable, "-m", "rnpkit.cli", "gen", "er",
               "--n", "12", "--p", "0.4", "--seed", "13"]
        a = subprocess.run(cmd, capture_output=True,
                           env={**os.environ, "PYTHONHASHSEED": "1"})
        b = subprocess.run(cmd, capture_output=True,
                           env={**os.environ, "PYTHONHASHSEED": "2"})
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout
