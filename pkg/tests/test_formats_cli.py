"""File formats and the command-line interface."""

import json
import random

import pytest

from redcycle import Quiver, framed
from redcycle.cli import main
from redcycle.errors import FormatError
from redcycle.formats import (
    dump_quiver,
    parse_sequence,
    quiver_from_dict,
    quiver_to_dict,
    to_dot,
)

from conftest import random_quiver


def roundtrip(q: Quiver) -> Quiver:
    return quiver_from_dict(json.loads(dump_quiver(q)))


def test_roundtrip_random_quivers():
    rng = random.Random(157)
    for _ in range(200):
        q = random_quiver(rng, max_n=6)
        assert roundtrip(q) == q


def test_roundtrip_framed_quiver():
    q = framed(Quiver.from_arrows([1, 2, 3], [(1, 2), (2, 3, 4)]))
    assert roundtrip(q) == q


def test_b_matrix_form_accepted():
    doc = {"labels": [1, 2], "b_matrix": [[0, 3], [-3, 0]]}
    assert quiver_from_dict(doc) == Quiver.from_arrows([1, 2], [(1, 2, 3)])


def test_arrows_output_is_canonical_and_deterministic():
    q = Quiver.from_arrows([1, 2, 3], [(2, 3, 4), (1, 2), (1, 3, 5)])
    doc = quiver_to_dict(q)
    assert doc["arrows"] == sorted(doc["arrows"])
    assert dump_quiver(q) == dump_quiver(roundtrip(q))


def test_bad_documents_rejected():
    with pytest.raises(FormatError):
        quiver_from_dict({"vertices": [1, 2], "arrows": [[1]]})
    with pytest.raises(FormatError):
        quiver_from_dict({"nonsense": True})
    with pytest.raises(FormatError):
        quiver_from_dict([1, 2])
    with pytest.raises(FormatError):
        quiver_from_dict({"labels": [1, 2], "b_matrix": [[0, 1], [1, 0]]})


def test_parse_sequence():
    assert parse_sequence("2,3") == (2, 3)
    assert parse_sequence("") == ()
    with pytest.raises(FormatError):
        parse_sequence("2,x")


def test_dot_export_shapes_and_labels():
    q = framed(Quiver.from_arrows([1, 2], [(1, 2, 3)]))
    dot = to_dot(q)
    assert "shape=circle" in dot and "shape=box" in dot
    assert 'label="3"' in dot
    assert dot == to_dot(q)


@pytest.fixture
def kprime_file(tmp_path):
    path = tmp_path / "kprime.json"
    path.write_text(json.dumps(
        {"vertices": [1, 2, 3], "arrows": [[1, 2, 1], [2, 3, 4], [1, 3, 5]]}
    ))
    return str(path)


def test_cli_mutate_prints_K(kprime_file, capsys):
    assert main(["mutate", "--in", kprime_file, "--seq", "2,3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["arrows"] == [[1, 2, 35], [2, 3, 4], [3, 1, 9]]


def test_cli_mutate_reduce_flag(kprime_file, capsys):
    assert main(["mutate", "--in", kprime_file, "--seq", "2,2", "--reduce"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["arrows"] == [[1, 2, 1], [1, 3, 5], [2, 3, 4]]


def test_cli_cmatrix(kprime_file, capsys):
    assert main(["cmatrix", "--in", kprime_file, "--seq", "1,2,3", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["rows"] == [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]


def test_cli_reddening_verify_exit_codes(kprime_file, capsys):
    assert main(["reddening-verify", "--in", kprime_file, "--seq", "1,2,3"]) == 0
    assert main(["reddening-verify", "--in", kprime_file, "--seq", "1,1"]) == 1
    capsys.readouterr()


def test_cli_search_and_mgs(kprime_file, capsys):
    assert main(["reddening-search", "--in", kprime_file, "--max-len", "3",
                 "--reduced", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {"sequence": [1, 2, 3], "permutation": "id"} in out["sequences"]
    assert main(["mgs-search", "--in", kprime_file, "--max-len", "3", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["count"] >= 1


def test_cli_cycle_verify(kprime_file, tmp_path, capsys):
    q = Quiver.from_arrows([1, 2, 3], [(1, 2, 1), (2, 3, 4), (1, 3, 5)])
    path = tmp_path / "q.json"
    path.write_text(dump_quiver(q))
    assert main(["cycle-verify", "--in", str(path), "--seq", "1,2,3"]) == 0
    assert main(["cycle-verify", "--in", str(path), "--seq", "1,2"]) == 1
    capsys.readouterr()


def test_cli_cycle_build_acyclic(tmp_path, capsys):
    t = tmp_path / "t.json"
    t.write_text(json.dumps({"vertices": [4], "arrows": []}))
    h = tmp_path / "h.json"
    h.write_text(json.dumps(
        {"vertices": [1, 2, 3], "arrows": [[1, 2, 1], [2, 3, 4], [1, 3, 5]]}
    ))
    code = main([
        "cycle-build", "acyclic", "--t", str(t), "--h", str(h),
        "--a", "[[2,4,3]]", "--n", "2,3", "--json",
    ])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sequence"] == [4, 3, 2, 1, 2, 3, 2, 3]
    assert out["simple"] and out["closes_equal"]


def test_cli_cycle_build_rejects_bad_factors(tmp_path, capsys):
    t = tmp_path / "t.json"
    t.write_text(json.dumps({"vertices": [4], "arrows": []}))
    h = tmp_path / "h.json"
    h.write_text(json.dumps({"vertices": [1, 2], "arrows": [[1, 2, 1]]}))
    code = main([
        "cycle-build", "equal", "--t", str(t), "--h", str(h),
        "--a", "[[1,1]]", "--mt", "4", "--mh", "1",
    ])
    assert code == 1
    capsys.readouterr()


def test_cli_classify_and_enumerate(kprime_file, capsys):
    assert main(["classify", "--in", kprime_file, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["acyclic"] is True
    assert main(["enumerate", "--in", kprime_file, "--budget", "50", "--json"]) == 0
    capsys.readouterr()


def test_cli_forkless_and_distinguishing(tmp_path, capsys):
    a2 = tmp_path / "a2.json"
    a2.write_text(json.dumps({"vertices": [1, 2], "arrows": [[1, 2, 2]]}))
    assert main(["forkless", "--in", str(a2), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["exhausted"] is True
    assert main(["distinguishing", "--in", str(a2), "--seq", "1,2",
                 "--a", "[[1],[1]]"]) == 0
    capsys.readouterr()


def test_cli_catalog_commands(capsys):
    assert main(["catalog", "list"]) == 0
    assert "fig1_extension" in capsys.readouterr().out
    assert main(["catalog", "show", "key_K_and_Kprime", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["permutations"]["Mprime"] == "(1,2)"
    assert main(["catalog", "verify", "key_K_and_Kprime"]) == 0
    capsys.readouterr()


def test_cli_export_dot(kprime_file, capsys):
    assert main(["export-dot", "--in", kprime_file]) == 0
    assert "digraph quiver" in capsys.readouterr().out


def test_cli_malformed_input_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["mutate", "--in", str(bad), "--seq", "1"]) == 2
    assert main(["mutate", "--in", str(tmp_path / "missing.json"), "--seq", "1"]) == 2
    assert main(["nonsense-command"]) == 2
    capsys.readouterr()


def test_cli_output_is_byte_deterministic(kprime_file, capsys):
    main(["catalog", "show", "R33", "--json"])
    first = capsys.readouterr().out
    main(["catalog", "show", "R33", "--json"])
    assert capsys.readouterr().out == first
