import json

import numpy as np
import pytest

from kronrep import cli
from kronrep.exactlin import Field
from kronrep.io import ModuleFormatError, dump_module, module_to_dict, parse_module
from kronrep.quiver_rep import InvalidModuleError, random_module
from kronrep.rank_props import rad_dim, soc_dim
from kronrep.testfamily import Subspace, ringel_e

E_TEXT = json.dumps({"field": {"prime": 5}, "r": 3, "dim": [2, 2],
                     "maps": [[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]})


@pytest.fixture
def e_file(tmp_path):
    path = tmp_path / "e.json"
    path.write_text(E_TEXT)
    return str(path)


def test_parse_e():
    M = parse_module(E_TEXT)
    assert M.dim == (2, 2) and M.r == 3
    assert M == ringel_e(Field.prime(5))


def test_parse_errors_name_the_location():
    with pytest.raises(ModuleFormatError, match="line 1"):
        parse_module("{bad json")
    doc = json.loads(E_TEXT)
    doc["maps"][1][0][1] = 1.5
    with pytest.raises(ModuleFormatError, match=r"maps\[1\]\[0\]\[1\]"):
        parse_module(json.dumps(doc))
    doc = json.loads(E_TEXT)
    doc["r"] = 4
    with pytest.raises(InvalidModuleError):
        parse_module(json.dumps(doc))
    del doc["dim"]
    with pytest.raises(ModuleFormatError, match="dim"):
        parse_module(json.dumps(doc))


def test_representatives_reduce_to_the_same_module():
    doc = json.loads(E_TEXT)
    doc["maps"][0][0][0] = 6
    doc["maps"][0][1][1] = -4
    assert parse_module(json.dumps(doc)) == parse_module(E_TEXT)
    assert dump_module(parse_module(json.dumps(doc))) == dump_module(parse_module(E_TEXT))


@pytest.mark.parametrize("field", [Field.prime(7), Field.rational()])
def test_dump_round_trip_is_byte_stable(field):
    M = random_module(field, 3, (2, 3), np.random.default_rng(1))
    text = dump_module(M)
    assert parse_module(text) == M
    assert dump_module(parse_module(text)) == text
    assert module_to_dict(M)["field"] == field.descriptor()


def test_check_esp_exhaustive_yes(e_file):
    report, code = cli.run_command(["check", "esp", e_file, "--d", "2", "--mode", "exhaustive", "--q", "5"])
    assert code == 0 and report["verdicts"][0]["status"] == "yes"
    assert report["verdicts"][0]["scope"] == "exact_over_Fq"
    assert len(report["input_digest"]) == 64


def test_check_csr_no_with_verifiable_witness(e_file):
    report, code = cli.run_command(["check", "csr", e_file, "--d", "1"])
    assert code == 2
    M = parse_module(E_TEXT)
    dims = set()
    for w in report["verdicts"][0]["witness"]:
        U = Subspace.span(M.field, w["subspace"])
        assert soc_dim(M, U) == w["soc_dim"] and rad_dim(M, U) == w["rad_dim"]
        dims.add(w["soc_dim"])
    assert dims == {2, 3}


def test_sampled_check_is_undetermined(e_file):
    _, code = cli.run_command(["check", "esp", e_file, "--d", "2", "--mode", "sample", "--count", "8"])
    assert code == 3


def test_reports_are_deterministic(e_file):
    argv = ["profile", e_file, "--d", "1"]
    a, _ = cli.run_command(argv)
    b, _ = cli.run_command(argv)
    a.pop("timing"), b.pop("timing")
    assert a == b and a["min_soc"] == 2 and a["max_soc"] == 3 and a["points"] == 31


def test_grassmann_count():
    report, code = cli.run_command(["grassmann", "count", "--d", "1", "--r", "3", "--q", "2"])
    assert code == 0 and report["count"] == report["gaussian_binomial"] == 7
    report, _ = cli.run_command(["grassmann", "enumerate", "--d", "2", "--r", "3", "--q", "2"])
    assert len(report["points"]) == 7


def test_out_flag_and_module_only(tmp_path, e_file, capsys):
    out = tmp_path / "report.json"
    assert cli.main(["stratum", e_file, "--out", str(out)]) == 0
    assert json.loads(out.read_text())["stratum"] == 2
    mod = tmp_path / "x.json"
    assert cli.main(["construct", "xu", "--subspace", "1,2,0", "--q", "5", "--module-only", "--out", str(mod)]) == 0
    M = parse_module(mod.read_text())
    assert M.dim == (1, 2)
    assert capsys.readouterr().out == ""


def test_errors_exit_with_one(tmp_path, capsys):
    assert cli.main(["check", "esp", str(tmp_path / "missing.json"), "--d", "1"]) == 1
    assert cli.main(["check", "esp", "--bogus"]) == 1
    assert cli.main(["frobnicate"]) == 1
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert cli.main(["dual", str(bad)]) == 1
    assert "line 1" in capsys.readouterr().err


def test_construct_kinds(tmp_path, e_file):
    for argv, dim in [(["construct", "projective", "--r", "3", "--index", "2"], [1, 3]),
                      (["construct", "injective", "--r", "3", "--index", "2"], [3, 1]),
                      (["construct", "ringel-e"], [2, 2]),
                      (["construct", "inflate", "--module", e_file, "--s", "4"], [2, 2]),
                      (["construct", "twist", "--module", e_file, "--g", "0,1,0;1,0,0;0,0,1"], [2, 2]),
                      (["construct", "tower", "--module", e_file, "--n", "2"], [4, 4])]:
        report, code = cli.run_command(argv)
        assert code == 0, report
        assert report["module"]["dim"] == dim
    _, code = cli.run_command(["construct", "projective", "--r", "3"])
    assert code == 1


def test_translate_hom_ext_dual_orbit(tmp_path, e_file):
    report, code = cli.run_command(["tau", e_file])
    assert code == 0 and report["stripped"] == {"P_1": 0, "P_2": 0}
    inv, _ = cli.run_command(["tau", e_file, "--inverse"])
    assert sorted([report["module"]["dim"], inv["module"]["dim"]]) == [[4, 10], [10, 4]]
    assert cli.run_command(["hom", e_file, e_file])[0]["dim"] == 1
    assert cli.run_command(["ext", e_file, e_file])[0]["dim"] == 5  # 1 - q(2, 2)
    assert cli.run_command(["dual", e_file])[0]["module"]["dim"] == [2, 2]
    orbit, code = cli.run_command(["orbit", e_file, "--range", "-1", "1"])
    assert code == 0 and len(orbit["rows"]) == 3 and orbit["window_limited"]
