"""Command line surface: grammar on the wire, exit codes, file output."""

import json
from fractions import Fraction

import pytest

from groupcut.cli import main
from groupcut.exactnum import QNum
from groupcut.pwl import load, to_text
from groupcut.catalog import kzh_function, kzh_params, lifted_function
from helpers import midpoint_pair

Q = lambda *a: QNum(Fraction(*a))


@pytest.fixture
def pair_files(tmp_path):
    mid, bar = midpoint_pair()
    mp = tmp_path / "mid.txt"
    bp = tmp_path / "bar.txt"
    mp.write_text(to_text(mid))
    bp.write_text(to_text(bar))
    return str(mp), str(bp)


def test_eval_examples(capsys):
    assert main(["eval", "kzh", "4/5"]) == 0
    assert capsys.readouterr().out == "1\n"
    assert main(["eval", "kzh", "219/800", "--side", "plus"]) == 0
    assert capsys.readouterr().out == "51443/147680\n"
    assert main(["eval", "psi", "0"]) == 0
    assert capsys.readouterr().out == "0\n"


def test_eval_lifted_at_a_moved_point(capsys):
    p = kzh_params()
    x = p.l + p.t2
    assert main(["eval", "kzh_lifted", str(x)]) == 0
    assert capsys.readouterr().out.strip() == str(lifted_function().eval(x))


def test_eval_side_needs_piecewise_linear(capsys):
    assert main(["eval", "kzh_lifted", "1/2", "--side", "plus"]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_function_lists_catalog(capsys):
    assert main(["eval", "nope", "0"]) == 2
    err = capsys.readouterr().err
    assert "unknown function 'nope'" in err
    assert "psi_prime" in err


def test_bad_number(capsys):
    assert main(["eval", "psi", "1/0"]) == 2
    assert "cannot parse number" in capsys.readouterr().err


def test_limit(capsys):
    assert main(["limit", "psi", "0", "minus"]) == 0
    assert capsys.readouterr().out == "1/2\n"
    assert main(["limit", "kzh", "219/800", "plus"]) == 0
    assert capsys.readouterr().out == "51443/147680\n"


def test_minimality_exit_codes(tmp_path, capsys):
    assert main(["minimality", "psi"]) == 0
    assert capsys.readouterr().out.strip() == "minimal"

    scaled = (tmp_path / "scaled.txt")
    mid, _ = midpoint_pair()
    scaled.write_text(to_text(mid.scale(Fraction(9, 10))))
    assert main(["minimality", str(scaled)]) == 1
    assert "not minimal" in capsys.readouterr().out


def test_additive_faces_text(capsys):
    assert main(["additive-faces", "psi"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == (
        "faces: 289  additive: 75  limit-additive: 87  non-additive: 127")
    assert "additive\tF({0}, {0}, {0})" in out.replace("        ", "\t") or \
        "F({0}, {0}, {0})" in out


def test_additive_faces_json_and_svg(tmp_path, capsys):
    jp = tmp_path / "faces.json"
    assert main(["additive-faces", "psi", "--format", "json",
                 "--out", str(jp)]) == 0
    capsys.readouterr()
    data = json.loads(jp.read_text())
    assert data["schema"] == "groupcut-diagram/1"

    sp = tmp_path / "faces.svg"
    assert main(["additive-faces", "psi", "--format", "svg",
                 "--out", str(sp)]) == 0
    assert sp.read_text().startswith("<svg")


def test_covering_output(capsys):
    assert main(["covering", "psi"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "component 0: (0, 1/8) (3/8, 1/2)"
    assert lines[1] == "uncovered: (1/8, 3/8) (1/2, 5/8) (5/8, 7/8) (7/8, 1)"
    assert lines[2] == "moves: 36"


def test_perturbation_rank_default(capsys):
    assert main(["perturbation-rank"]) == 0
    out = capsys.readouterr().out
    assert "rank: 39" in out
    assert "nullity: 0" in out


def test_perturbation_rank_rejects_other_functions(capsys):
    assert main(["perturbation-rank", "psi"]) == 2
    assert "kzh" in capsys.readouterr().err


def test_epsilon_lipschitz(pair_files, capsys):
    mp, bp = pair_files
    assert main(["epsilon", "lipschitz", mp, bp]) == 0
    assert capsys.readouterr().out == "m = 1/4\nM = 1/4\nC = 1\nepsilon = 1/32\n"
    assert main(["epsilon", "lipschitz", mp, bp, "--check"]) == 0
    out = capsys.readouterr().out
    assert "minimal at +epsilon: True" in out
    assert "minimal at -epsilon: True" in out


def test_epsilon_scaling(pair_files, capsys):
    mp, bp = pair_files
    assert main(["epsilon", "scaling", mp, bp]) == 0
    assert capsys.readouterr().out == "epsilon = 3\n"


def test_verify_text_and_json(capsys):
    assert main(["verify", "psi"]) == 0
    assert "claim psi_separation: verified" in capsys.readouterr().out

    assert main(["verify", "psi", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "groupcut-verify/1"
    assert len(data["reports"]) == 1
    assert data["reports"][0]["status"] == "verified"


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "kzh", "kzh_lifted", "psi", "psi_prime"]


def test_catalog_export_round_trip(tmp_path, capsys):
    path = tmp_path / "kzh.txt"
    assert main(["catalog", "export", "kzh", "--out", str(path)]) == 0
    capsys.readouterr()
    back = load(str(path))
    assert back.rows == kzh_function().rows
    assert back.special_intervals == kzh_function().special_intervals


def test_catalog_export_errors(capsys):
    assert main(["catalog", "export"]) == 2
    capsys.readouterr()
    assert main(["catalog", "export", "kzh_lifted"]) == 2
    assert "not piecewise linear" in capsys.readouterr().err


def test_diagram_files(tmp_path, capsys):
    sp = tmp_path / "psi.svg"
    assert main(["diagram", "psi", "--out", str(sp)]) == 0
    svg = sp.read_text()
    assert svg.startswith("<svg")
    assert 'data-vertex="(3/8, 3/8)"' in svg

    assert main(["diagram", "psi", "--no-cones", "--out", str(sp)]) == 0
    assert 'class="cone"' not in sp.read_text()

    jp = tmp_path / "psi.json"
    assert main(["diagram", "psi", "--format", "json", "--out", str(jp)]) == 0
    capsys.readouterr()
    assert json.loads(jp.read_text())["schema"] == "groupcut-diagram/1"


def test_file_based_function(tmp_path, capsys):
    mid, _ = midpoint_pair()
    path = tmp_path / "mid.txt"
    path.write_text(to_text(mid))
    assert main(["eval", str(path), "1/4"]) == 0
    assert capsys.readouterr().out.strip() == str(mid.eval(Q(1, 4)))
    assert main(["minimality", str(path)]) == 0


def test_no_arguments_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
