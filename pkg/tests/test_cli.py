import json
import subprocess
import sys

from weylipse.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- info and equations ---


def test_info(capsys):
    code, out, err = run_cli(capsys, "info", "B2")
    assert code == 0 and err == ""
    assert "type: B2" in out
    assert "rank: 2" in out
    assert "detA: 2" in out
    assert "weyl_order: 8" in out
    assert "delta: (3/2,2)" in out


def test_equations(capsys):
    code, out, _ = run_cli(capsys, "primary-eq", "A2")
    assert code == 0
    assert out.strip() == "x1^2 + x2^2 - x1*x2 - x1 - x2 = 0"

    code, out, _ = run_cli(capsys, "secondary-eq", "A1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["equation"] == "h1^2 - 1 = 0"
    assert payload["quad"] == [[2]] and payload["constant"] == -1


# --- orbits ---


def test_orbits_csv(capsys):
    code, out, _ = run_cli(capsys, "orbits", "A2", "--csv")
    assert code == 0
    assert out == "h;minimal;size\n1,1;0,0;6\n"


def test_orbits_json_schema(capsys):
    code, out, _ = run_cli(capsys, "orbits", "B2xA1", "--json", "--expand")
    assert code == 0
    payload = json.loads(out)
    assert payload["type"] == "B2xA1"
    orbits = payload["orbits"]
    assert [o["h"] for o in orbits] == [[1, 1, 1], [0, 1, 3]]
    assert [o["minimal"] for o in orbits] == [[0, 0, 0], [1, 1, -1]]
    assert [o["size"] for o in orbits] == [16, 8]
    for o in orbits:
        assert len(o["elements"]) == o["size"]
        assert o["minimal"] in o["elements"]


def test_orbits_expand_respects_cap(capsys):
    code, out, err = run_cli(capsys, "orbits", "B2", "--json", "--expand", "--cap", "4")
    assert code == 0
    payload = json.loads(out)
    assert "elements" not in payload["orbits"][0]
    assert "omitted" in err


def test_orbits_csv_expand_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "orbits", "A2", "--csv", "--expand")
    assert code == 1 and "--expand" in err


def test_orbits_threads_match(capsys):
    code, serial, _ = run_cli(capsys, "orbits", "B3", "--csv")
    assert code == 0
    code, parallel, _ = run_cli(capsys, "orbits", "B3", "--csv", "--threads", "2")
    assert code == 0
    assert serial == parallel


# --- expand ---


def test_expand_default_origin(capsys):
    code, out, _ = run_cli(capsys, "expand", "A2")
    assert code == 0
    assert out.splitlines() == ["0,0", "0,1", "1,0", "1,2", "2,1", "2,2"]


def test_expand_cap_exceeded_is_exit_2(capsys):
    code, _, err = run_cli(capsys, "expand", "A2", "--cap", "3")
    assert code == 2 and "cap" in err


def test_expand_bad_point_is_exit_2(capsys):
    code, _, err = run_cli(capsys, "expand", "A2", "--point", "1,1")
    assert code == 2 and "primary" in err


# --- realize and reduced-words ---


def test_realize_identity(capsys):
    code, out, _ = run_cli(capsys, "realize", "A2", "--word", "")
    assert code == 0
    assert "P: (0,0)" in out and "S: (1,1)" in out and "length: 0" in out


def test_realize_json(capsys):
    code, out, _ = run_cli(capsys, "realize", "B2", "--word", "1,2,1,2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["pvector"] == [3, 4]
    assert payload["svector"] == [-1, -1]
    assert payload["length"] == 4


def test_realize_bad_word(capsys):
    code, _, err = run_cli(capsys, "realize", "A2", "--word", "1,x")
    assert code == 1 and "word" in err
    code, _, err = run_cli(capsys, "realize", "A2", "--word", "9")
    assert code == 1


def test_reduced_words_by_word_and_pvector(capsys):
    code, out, _ = run_cli(capsys, "reduced-words", "A2", "--word", "1,2,1")
    assert code == 0
    assert "count: 2" in out and "1,2,1" in out and "2,1,2" in out

    code, out2, _ = run_cli(capsys, "reduced-words", "A2", "--pvector", "2,2")
    assert code == 0
    assert out2 == out

    code, _, err = run_cli(capsys, "reduced-words", "A2")
    assert code == 1
    code, _, err = run_cli(capsys, "reduced-words", "A2", "--word", "1", "--pvector", "1,0")
    assert code == 1
    code, _, err = run_cli(capsys, "reduced-words", "A2", "--pvector", "3,0")
    assert code == 2


# --- bruhat ---


def test_bruhat_agreement_exit_codes(capsys):
    code, out, err = run_cli(capsys, "bruhat", "A2", "--method", "both")
    assert code == 0 and "disagree" not in err
    assert "kind: bruhat_subword" in out

    code, _, err = run_cli(capsys, "bruhat", "A3", "--method", "both")
    assert code == 3
    assert "disagree" in err and "missing 6" in err


def test_bruhat_single_methods(capsys):
    code, out, _ = run_cli(capsys, "bruhat", "A3", "--method", "primary")
    assert code == 0 and "kind: bruhat_primary_filtered" in out and "covers: 54" in out
    code, out, _ = run_cli(capsys, "bruhat", "A3", "--method", "subword")
    assert code == 0 and "kind: bruhat_subword" in out


def test_bruhat_json_and_dot(capsys, tmp_path):
    dot_file = tmp_path / "a2.dot"
    code, out, _ = run_cli(
        capsys, "bruhat", "A2", "--method", "subword", "--dot", str(dot_file), "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "bruhat_subword"
    assert sorted(map(tuple, payload["nodes"])) == [
        (0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2),
    ]
    for a, b in payload["covers"]:
        assert 0 <= a < 6 and 0 <= b < 6
    text = dot_file.read_text()
    assert text.startswith('digraph "bruhat_subword"') and text.count("->") == len(
        payload["covers"]
    )


def test_bruhat_cap(capsys):
    code, _, err = run_cli(capsys, "bruhat", "E8")
    assert code == 2 and "cap" in err


# --- verify ---


def test_verify_small_type_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "A2")
    assert code == 0
    assert "FAIL" not in out
    assert "bruhat-constructions-agree" in out


def test_verify_a3_surfaces_bruhat_divergence(capsys):
    code, out, _ = run_cli(capsys, "verify", "A3")
    assert code == 3
    assert "FAIL bruhat-constructions-agree" in out


# --- usage errors and determinism ---


def test_unknown_type_and_flags(capsys):
    code, _, err = run_cli(capsys, "info", "H3")
    assert code == 1
    code, _, err = run_cli(capsys, "orbits", "A2", "--nonsense")
    assert code == 1
    code, _, err = run_cli(capsys, "info", "E9")
    assert code == 1


def test_byte_identical_runs(capsys):
    first = run_cli(capsys, "orbits", "F4", "--json")
    second = run_cli(capsys, "orbits", "F4", "--json")
    assert first == second


def test_console_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "weylipse.cli", "orbits", "A3", "--csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "h;minimal;size\n1,1,1;0,0,0;24\n"
