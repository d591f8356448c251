import json

import pytest

from cubefire import cli
from cubefire.partition import construct_even, h4_order5, h4_order7


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_doc(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestPartitionCommand:
    def test_h4_order7_matches_known_listing(self, capsys):
        code, out, _ = run(capsys, "partition", "--n", "4", "--order", "7")
        assert code == 0
        assert json.loads(out)["sets"] == [list(s) for s in h4_order7().sets]

    def test_order_3_refused(self, capsys):
        code, _, err = run(capsys, "partition", "--n", "3", "--order", "3")
        assert code == 1
        assert "order 3" in err

    def test_h1_order2(self, capsys):
        code, out, _ = run(capsys, "partition", "--n", "1", "--order", "2")
        assert code == 0
        assert json.loads(out) == {"n": 1, "k": 2, "sets": [[0], [1]]}

    def test_inadmissible_order_prints_ranges(self, capsys):
        code, _, err = run(capsys, "partition", "--n", "3", "--order", "5")
        assert code == 1
        assert "2..8" in err

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "p.json"
        code, out, _ = run(capsys, "partition", "--n", "2", "--order", "2",
                           "--out", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["k"] == 2

    def test_byte_identical_output(self, capsys):
        _, out1, _ = run(capsys, "partition", "--n", "5", "--order", "9")
        _, out2, _ = run(capsys, "partition", "--n", "5", "--order", "9")
        assert out1 == out2


class TestVerifyCommand:
    def test_valid_file(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", h4_order5().to_doc())
        code, out, _ = run(capsys, "verify", "--partition", path)
        assert code == 0
        assert json.loads(out)["valid"]

    def test_duplicate_vertex_is_structural(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", {"n": 1, "sets": [[0, 1], [1]]})
        code, out, _ = run(capsys, "verify", "--partition", path)
        assert code == 1

    def test_internal_edge_names_the_pair(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", {"n": 2, "sets": [[0, 1], [2, 3]]})
        code, out, _ = run(capsys, "verify", "--partition", path)
        assert code == 2
        doc = json.loads(out)
        pairs = [v["vertices"] for v in doc["violations"]
                 if v["condition"] == "internal-edge"]
        assert [0, 1] in pairs

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "verify", "--partition", str(path))
        assert code == 1


class TestSimulateCommand:
    def test_from_partition_order5(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", h4_order5().to_doc())
        code, out, _ = run(capsys, "simulate", "--from-partition", path,
                           "--schedule", "parallel")
        assert code == 0
        doc = json.loads(out)
        assert doc["transient"] == 0 and doc["period"] == 5
        assert doc["total_chips"] == 32
        assert doc["firing_sets"][0] == [0, 13]

    def test_hamiltonian_fixed_point(self, capsys):
        code, out, _ = run(capsys, "simulate", "--hamiltonian", "--n", "5")
        assert code == 0
        doc = json.loads(out)
        assert doc["period"] == 1 and doc["firing_sets"] == [[]]

    def test_orientation_file(self, capsys, tmp_path):
        path = write_doc(tmp_path, "o.json", {"n": 1, "bits": [0]})
        code, out, _ = run(capsys, "simulate", "--orientation", path)
        assert code == 0
        assert json.loads(out)["period"] == 2

    def test_schedule_file(self, capsys, tmp_path):
        opath = write_doc(tmp_path, "o.json", {"n": 1, "bits": [0]})
        spath = write_doc(tmp_path, "s.json", {"blocks": [[0], [1]]})
        code, out, _ = run(capsys, "simulate", "--orientation", opath,
                           "--schedule", spath)
        assert code == 0
        assert json.loads(out)["period"] == 2

    def test_undetermined_exit_3(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", h4_order5().to_doc())
        code, out, _ = run(capsys, "simulate", "--from-partition", path,
                           "--max-steps", "2")
        assert code == 3
        assert json.loads(out)["determined"] is False

    def test_conflicting_sources(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", h4_order5().to_doc())
        code, _, err = run(capsys, "simulate", "--from-partition", path,
                           "--hamiltonian")
        assert code == 1

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "simulate", "--hamiltonian", "--n", "3",
                           "--format", "text")
        assert code == 0
        assert "chip period 1" in out


class TestCensusCommand:
    def test_h2(self, capsys):
        code, out, _ = run(capsys, "census", "--n", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["total"] == 16
        assert {e["period"] for e in doc["entries"]} == {1, 2, 4}

    def test_h4_guarded(self, capsys):
        code, _, err = run(capsys, "census", "--n", "4")
        assert code == 1
        assert "2**32" in err


class TestSearchCommand:
    def test_order_3_negative(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "3", "--order", "3")
        assert code == 2
        assert json.loads(out)["found"] is False

    def test_order_4_witness(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "3", "--order", "4")
        assert code == 0
        doc = json.loads(out)
        assert doc["found"] and doc["witness"]["k"] == 4

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "search", "--n", "6", "--order", "3")
        assert code == 1


class TestExportDotCommand:
    def test_partition_groups(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", construct_even(3, 4).to_doc())
        code, out, _ = run(capsys, "export-dot", "--partition", path)
        assert code == 0
        assert 'subgraph cluster_0' in out
        assert '"000";' in out
        assert '"001" -- "011";' in out

    def test_orientation_single_arc(self, capsys, tmp_path):
        path = write_doc(tmp_path, "o.json", {"n": 1, "bits": [0]})
        code, out, _ = run(capsys, "export-dot", "--orientation", path)
        assert code == 0
        assert '"1" -> "0";' in out

    def test_fig3_groupings(self, capsys, tmp_path):
        for part in (h4_order5(), h4_order7()):
            path = write_doc(tmp_path, "p.json", part.to_doc())
            code, out, _ = run(capsys, "export-dot", "--partition", path)
            assert code == 0
            for i, s in enumerate(part.sets):
                block = out.split(f"cluster_{i} ")[1].split("}")[0]
                for v in s:
                    assert f'"{format(v, "04b")}"' in block

    def test_deterministic(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", h4_order5().to_doc())
        _, out1, _ = run(capsys, "export-dot", "--partition", path)
        _, out2, _ = run(capsys, "export-dot", "--partition", path)
        assert out1 == out2

    def test_invalid_input(self, capsys, tmp_path):
        path = write_doc(tmp_path, "p.json", {"n": 2, "sets": [[0, 1], [2, 3]]})
        code, _, err = run(capsys, "export-dot", "--partition", path)
        assert code == 1


class TestPipelines:
    @pytest.mark.parametrize("n,order", [(1, 2), (3, 4), (4, 5), (5, 16), (6, 9)])
    def test_partition_verify_simulate_round_trip(self, capsys, tmp_path, n, order):
        path = str(tmp_path / "p.json")
        code, _, _ = run(capsys, "partition", "--n", str(n),
                         "--order", str(order), "--out", path)
        assert code == 0
        code, _, _ = run(capsys, "verify", "--partition", path)
        assert code == 0
        code, out, _ = run(capsys, "simulate", "--from-partition", path)
        assert code == 0
        assert json.loads(out)["period"] == order
