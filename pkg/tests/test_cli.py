import json

import pytest

from digitop.cli import main
from digitop.fileio import (
    InputFormatError,
    format_points,
    load_points,
    parse_adjacency_arg,
    parse_points,
)


@pytest.fixture
def ring_file(tmp_path):
    path = tmp_path / "ring.txt"
    assert main(["generate", "--kind", "rect-boundary", "--params", "5", "5", "-o", str(path)]) == 0
    return path


@pytest.fixture
def box_file(tmp_path):
    path = tmp_path / "box.txt"
    assert main(["generate", "--kind", "box-surface", "--params", "3", "3", "3", "-o", str(path)]) == 0
    return path


def test_parse_points_comments_and_blanks():
    pts, n = parse_points("# header\n\n1 2\n3 4 # trailing\n")
    assert n == 2 and pts == frozenset({(1, 2), (3, 4)})


def test_parse_points_errors_carry_line_numbers():
    with pytest.raises(InputFormatError, match=":2:"):
        parse_points("1 2\n1 x\n")
    with pytest.raises(InputFormatError, match=":2:"):
        parse_points("1 2\n1 2 3\n")
    with pytest.raises(InputFormatError, match="no data"):
        parse_points("# nothing\n")


def test_adjacency_arg_names():
    assert parse_adjacency_arg("axis", 2).label == "axis"
    assert parse_adjacency_arg("full", 3).label == "full"
    with pytest.raises(InputFormatError):
        parse_adjacency_arg("king", 2)


def test_adjacency_custom_file(tmp_path):
    path = tmp_path / "adj.txt"
    path.write_text("1 0\n-1 0\n0 1\n0 -1\n1 1\n-1 -1\n", encoding="utf-8")
    spec = parse_adjacency_arg(f"custom:{path}", 2)
    assert (1, 1) in spec.offsets
    bad = tmp_path / "bad.txt"
    bad.write_text("1 0\n-1 0\n0 1\n0 -1\n1 1\n", encoding="utf-8")
    with pytest.raises(InputFormatError):
        parse_adjacency_arg(f"custom:{bad}", 2)


def test_generate_and_reload(tmp_path, ring_file):
    pts, n = load_points(ring_file)
    assert n == 2 and len(pts) == 16


def test_jordan_command_passes(ring_file, capsys):
    assert main(["jordan", "--points", str(ring_file), "--alpha", "axis", "--beta", "full"]) == 0
    out = capsys.readouterr().out
    assert "all-true: True" in out


def test_jordan_uncertified_input_is_a_usage_error(tmp_path):
    path = tmp_path / "arc.txt"
    path.write_text("0 0\n1 1\n2 2\n", encoding="utf-8")
    assert main(["jordan", "--points", str(path), "--alpha", "full", "--beta", "axis"]) == 2


def test_verify_manifold_exit_codes(ring_file, tmp_path):
    assert (
        main(["verify-manifold", "--points", str(ring_file), "--alpha", "axis", "--beta", "full"])
        == 0
    )
    broken = tmp_path / "broken.txt"
    pts, _ = load_points(ring_file)
    broken.write_text(format_points(sorted(pts)[1:]), encoding="utf-8")
    assert (
        main(["verify-manifold", "--points", str(broken), "--alpha", "axis", "--beta", "full"])
        == 1
    )


def test_good_pair_exit_codes():
    assert main(["good-pair", "--n", "2", "--alpha", "full", "--beta", "axis"]) == 0
    assert main(["good-pair", "--n", "2", "--alpha", "full", "--beta", "full"]) == 1
    # inconclusive contractibility at the default rewrite bound
    assert main(["good-pair", "--n", "2", "--alpha", "axis", "--beta", "full"]) == 3
    assert main(["good-pair", "--n", "2", "--alpha", "axis", "--beta", "full", "--N", "4"]) == 0


def test_simple_points_command(ring_file, tmp_path):
    assert main(["simple-points", "--points", str(ring_file), "--alpha", "axis", "--beta", "full"]) == 0
    arc = tmp_path / "arc.txt"
    arc.write_text("0 0\n1 1\n2 2\n", encoding="utf-8")
    assert main(["simple-points", "--points", str(arc), "--alpha", "full", "--beta", "axis"]) == 1


def test_json_reports_are_byte_identical(ring_file, tmp_path, capsys):
    argv = ["jordan", "--points", str(ring_file), "--alpha", "axis", "--beta", "full", "--format", "json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["tool"] == "digitop"
    assert payload["result"]["all_true"] is True


def test_build_json_and_euler(ring_file, capsys):
    assert main(["build", "--points", str(ring_file), "--alpha", "axis", "--beta", "full", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["result"]["K"]["n"] == 2
    assert payload["result"]["K_prime"]["simplices"]
    assert main(["euler", "--points", str(ring_file), "--alpha", "axis", "--beta", "full", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["result"] == {"chi_K": 0, "chi_K_prime": 0}


def test_check_pseudomanifold_command(ring_file, box_file):
    assert main(["check-pseudomanifold", "--points", str(ring_file), "--alpha", "axis", "--beta", "full"]) == 0
    assert main(["check-pseudomanifold", "--points", str(box_file), "--alpha", "axis", "--beta", "full"]) == 0


def test_check_separation_command(ring_file, tmp_path):
    assert main(["check-separation", "--points", str(ring_file), "--alpha", "axis", "--beta", "full"]) == 0
    plate = tmp_path / "plate.txt"
    plate.write_text("0 0 0\n1 0 0\n0 1 1\n1 1 1\n", encoding="utf-8")
    assert main(["check-separation", "--points", str(plate), "--alpha", "full", "--beta", "axis"]) == 1


def test_off_export(box_file, tmp_path, capsys):
    out = tmp_path / "box.off"
    code = main(
        ["build", "--points", str(box_file), "--alpha", "axis", "--beta", "full",
         "--format", "off", "-o", str(out)]
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "OFF"
    nv, nf, _ = map(int, lines[1].split())
    assert nv > 0 and nf > 0
    assert "warning" in capsys.readouterr().err


def test_replay_round_trip(tmp_path, capsys):
    report = tmp_path / "gp.json"
    argv = ["good-pair", "--n", "2", "--alpha", "full", "--beta", "full", "--format", "json", "-o", str(report)]
    assert main(argv) == 1
    capsys.readouterr()
    assert main(["good-pair", "--n", "2", "--alpha", "full", "--beta", "full", "--replay", str(report)]) == 1
    out = capsys.readouterr().out
    assert "violation reproduced" in out
    # a passing report replays to a fresh run with the same verdict
    passing = tmp_path / "ok.json"
    assert main(["good-pair", "--n", "2", "--alpha", "full", "--beta", "axis", "--format", "json", "-o", str(passing)]) == 0
    assert main(["good-pair", "--n", "2", "--alpha", "full", "--beta", "axis", "--replay", str(passing)]) == 0


def test_replay_separation_witness(tmp_path, capsys):
    plate = tmp_path / "plate.txt"
    plate.write_text("0 0 0\n1 0 0\n0 1 1\n1 1 1\n", encoding="utf-8")
    report = tmp_path / "sep.json"
    argv = ["check-separation", "--points", str(plate), "--alpha", "full", "--beta", "axis",
            "--format", "json", "-o", str(report)]
    assert main(argv) == 1
    assert main(["check-separation", "--points", str(plate), "--alpha", "full", "--beta", "axis",
                 "--replay", str(report)]) == 1


def test_usage_errors(tmp_path):
    assert main(["jordan", "--points", str(tmp_path / "missing.txt")]) == 2
    pts = tmp_path / "p.txt"
    pts.write_text("0 0\n1 0\n", encoding="utf-8")
    assert main(["jordan", "--points", str(pts), "--n", "3"]) == 2
    assert main(["jordan", "--points", str(pts), "--margin", "1"]) == 2
    assert main(["good-pair", "--alpha", "full", "--beta", "axis"]) == 2  # no --n


def test_replay_manifold_witness(tmp_path):
    broken = tmp_path / "broken.txt"
    pts = sorted(p for p in __import__("digitop").rect_boundary(5, 5))
    broken.write_text(format_points(pts[1:]), encoding="utf-8")
    report = tmp_path / "vm.json"
    argv = ["verify-manifold", "--points", str(broken), "--alpha", "axis", "--beta", "full",
            "--format", "json", "-o", str(report)]
    assert main(argv) == 1
    assert main(["verify-manifold", "--points", str(broken), "--alpha", "axis", "--beta", "full",
                 "--replay", str(report)]) == 1
