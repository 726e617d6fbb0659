import json
import subprocess
import sys

import pytest

from digitopo import gen_box, gen_cross, gen_interval, ramp_partition
from digitopo.cli import run
from digitopo.formats import homotopy_to_json, image_to_json, map_to_json, partition_to_json
from digitopo.morphisms import DigitalMap, HomotopyTable, identity, translation


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_sphere(capsys):
    code, out, _ = call(capsys, "analyze", "--gen", "sphere:2", "--adjacency", "6",
                        "--model-adjacency", "1", "--with-boundary")
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] is True and doc["dimension"] == 2
    assert len(doc["boundary"]) == 8


def test_euler_interval(capsys):
    code, out, _ = call(capsys, "euler", "--gen", "interval:0:1", "--kl", "1")
    assert code == 0 and json.loads(out)["euler_characteristic"] == 1


def test_euler_text(capsys):
    code, out, _ = call(capsys, "euler", "--gen", "interval:0:1", "--text")
    assert out == "1\n"


def test_cross_points(capsys, tmp_path):
    path = tmp_path / "cross.json"
    path.write_text(json.dumps(image_to_json(gen_cross(3))))
    code, out, _ = call(capsys, "analyze", "--file", str(path), "--points", "(0,0),(2,0)")
    rows = json.loads(out)["points"]
    assert code == 0
    assert [r["neighborhood_size"] for r in rows] == [4, 2]
    assert all(r["neighborhood_edges"] == 0 for r in rows)


def test_not_a_manifold_still_exits_0(capsys):
    code, out, _ = call(capsys, "analyze", "--gen", "sphere:1", "--adjacency", "8")
    assert code == 0 and json.loads(out)["verdict"] is False


def test_rim_excluded_unless_requested(capsys):
    _, out, _ = call(capsys, "analyze", "--gen", "cross:3", "--with-boundary")
    doc = json.loads(out)
    assert doc["verdict"] is True and len(doc["rim"]) == 4 and len(doc["excluded"]) == 4
    _, out, _ = call(capsys, "analyze", "--gen", "cross:3", "--with-boundary", "--include-rim")
    doc = json.loads(out)
    assert doc["verdict"] is False and doc["excluded"] == [] and len(doc["rim"]) == 4


def test_plain_text_image(capsys, tmp_path):
    path = tmp_path / "s0.txt"
    path.write_text("-1\n1\n")
    code, out, _ = call(capsys, "analyze", "--file", str(path), "--kl", "1")
    assert code == 0 and json.loads(out)["dimension"] == 0
    # no adjacency recorded in the file and none given
    assert call(capsys, "analyze", "--file", str(path))[0] == 2


@pytest.mark.parametrize("argv", [
    ["analyze", "--gen", "sphere:2", "--adjacency", "7"],
    ["analyze", "--gen", "bogus:1"],
    ["analyze", "--file", "/nonexistent/file.json"],
    ["euler"],
    ["analyze", "--gen", "interval:0:4", "--points", "(9)"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and "error" in err


def test_malformed_file_reports_position(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 2, "adjacency": 1, "points": [[0, 0], [0]]}))
    code, _, err = call(capsys, "euler", "--file", str(path))
    assert code == 2 and "bad.json" in err and "points[1]" in err


def test_unknown_flag_is_an_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["euler", "--gen", "interval:0:1", "--frobnicate"])
    assert exc.value.code == 2


def test_check_map_exit_codes(capsys, tmp_path):
    M, N = gen_interval(0, 1), gen_interval(0, 2)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(map_to_json(DigitalMap(M, N, {(0,): (0,), (1,): (1,)}))))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(map_to_json(DigitalMap(M, N, {(0,): (0,), (1,): (2,)}))))
    assert call(capsys, "check-map", str(good))[0] == 0
    assert call(capsys, "check-map", str(bad))[0] == 1


def test_check_iso(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps(map_to_json(translation(gen_interval(0, 3), (4,)))))
    assert call(capsys, "check-iso", "--map", str(path))[0] == 0
    other = tmp_path / "s1.json"
    other.write_text(json.dumps(image_to_json(gen_interval(10, 13))))
    code, out, _ = call(capsys, "check-iso", "--gen", "interval:0:3", "--other", str(other))
    assert code == 0 and json.loads(out)["isomorphic"] is True
    code, _, _ = call(capsys, "check-iso", "--gen", "box:0:1:0:1", "--other", str(other))
    assert code == 1


def test_check_pou(capsys, tmp_path):
    path = tmp_path / "pou.json"
    path.write_text(json.dumps(partition_to_json(ramp_partition(gen_box([(-2, 5), (-2, 2)]), 3))))
    overlap = ",".join(f"({x},{y})" for x in (1, 2) for y in range(-2, 3))
    assert call(capsys, "check-pou", str(path), "--points", overlap)[0] == 0
    code, out, _ = call(capsys, "check-pou", str(path))
    assert code == 1 and json.loads(out)["neighborhoods_meet_supports"] is False


def test_check_homotopy(capsys, tmp_path):
    M = gen_interval(0, 2)
    H = HomotopyTable(M, M, 2, {(p, t): (max(p[0] - t, 0),) for p in M.points for t in range(3)})
    files = {}
    for name, doc in [("h", homotopy_to_json(H)), ("f", map_to_json(identity(M))),
                      ("g", map_to_json(DigitalMap(M, M, {p: (0,) for p in M.points})))]:
        files[name] = tmp_path / f"{name}.json"
        files[name].write_text(json.dumps(doc))
    code, out, _ = call(capsys, "check-homotopy", str(files["h"]),
                        "--f", str(files["f"]), "--g", str(files["g"]))
    assert code == 0 and json.loads(out)["homotopy"] is True
    code, out, _ = call(capsys, "check-homotopy", str(files["h"]),
                        "--f", str(files["f"]), "--g", str(files["f"]))
    assert code == 1 and json.loads(out)["reason"].startswith("endpoint:")


def test_orient(capsys):
    code, out, _ = call(capsys, "orient", "--gen", "interval:0:3")
    doc = json.loads(out)
    assert code == 0 and doc["connected_ray_order_count"] == 2 and doc["zero_manifold"] is False
    _, out, _ = call(capsys, "orient", "--gen", "sphere:0")
    assert json.loads(out)["orientations"] == 4


def test_components(capsys):
    _, out, _ = call(capsys, "components", "--gen", "sphere:0")
    doc = json.loads(out)
    assert doc["count"] == 2 and doc["totally_disconnected"] is True


def test_remove_option(capsys):
    _, out, _ = call(capsys, "analyze", "--gen", "box:0:4:0:4", "--remove", "(2,2)",
                     "--with-boundary")
    assert sorted(json.loads(out)["interior"]) == [[1, 1], [1, 3], [3, 1], [3, 3]]


def test_gen_round_trip(capsys):
    _, out, _ = call(capsys, "gen", "--gen", "cross:2")
    doc = json.loads(out)
    assert len(doc["points"]) == 9 and len(doc["rim"]) == 4


def test_sweep(capsys):
    _, out, _ = call(capsys, "analyze", "--gen", "sphere:1", "--adjacency", "4", "--sweep")
    assert {"model_adjacency": 1, "dimension": 1} in json.loads(out)["passing"]


def test_corpus(capsys):
    code, out, _ = call(capsys, "corpus")
    assert code == 0
    assert "FAIL " not in out


def test_corpus_filters(capsys):
    code, out, _ = call(capsys, "corpus", "--filter", "chi-product")
    assert code == 0 and "DISCREPANCY-EXPECTED" in out and "-4" in out
    _, out, _ = call(capsys, "corpus", "--filter", "fig2", "--json")
    (row,) = json.loads(out)
    assert row["status"] == "PASS"


def test_output_is_byte_deterministic():
    argv = [sys.executable, "-m", "digitopo", "analyze", "--gen", "box:0:4:0:4",
            "--remove", "(2,2)", "--with-boundary"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n") and b"\r" not in first
