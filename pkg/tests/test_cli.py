import json

import pytest

from altdimap.cli import main
from altdimap.formats import emit_adm, emit_pg
from altdimap.invariants import gallery
from altdimap.minors import excluded_library

from conftest import U_TEXT


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, d in excluded_library().items():
        paths[name] = tmp_path / f"{name}.adm"
        paths[name].write_text(emit_adm(d))
    paths["u"] = tmp_path / "u.adm"
    paths["u"].write_text(U_TEXT)
    paths["k4"] = tmp_path / "k4.pg"
    paths["k4"].write_text(emit_pg(gallery()["K4"]))
    paths["bad"] = tmp_path / "bad.adm"
    paths["bad"].write_text('{"format":"adm-v1","vertices":[{"id":"v","rot":["+e","+f","-e","-f"]}],'
                            '"edges":[{"id":"e","tail":"v","head":"v"},{"id":"f","tail":"v","head":"v"}]}')
    paths["torus"] = tmp_path / "torus.adm"
    paths["torus"].write_text('{"format":"adm-v1","vertices":[{"id":"v","rot":["+a","-c","+b","-a","+c","-b"]}],'
                              '"edges":[{"id":"a","tail":"v","head":"v"},{"id":"b","tail":"v","head":"v"},'
                              '{"id":"c","tail":"v","head":"v"}]}')
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_eti_distinct_lists_two_polynomials(files, capsys):
    code, out = run(capsys, "eti", files["g13"], "--all-orders", "--distinct")
    assert code == 0
    assert {line.split("    ")[0] for line in out.splitlines()} == {"w*y*z", "a*w^2 + b*w*y + c*w*z"}


def test_ctutte_all_orders_not_well_defined(files, capsys):
    code, out = run(capsys, "ctutte", files["g23c"], "--all-orders")
    assert code == 2
    assert {line.split("    ")[0] for line in out.splitlines()} == {"x*y", "1"}


def test_validate_and_stats(files, capsys):
    assert run(capsys, "validate", files["u"])[0] == 0
    code, out = run(capsys, "stats", files["u"])
    assert code == 0 and out.strip() == "k=1 is=1 af=1 cf=1 edges=1 genus=0"


def test_invalid_file_exits_one(files, capsys):
    assert main(["validate", files["bad"]]) == 1
    assert main(["validate", files["bad"] + ".missing"]) == 1


def test_multi_type_semiloop_exits_three(files, capsys):
    assert main(["classify", files["torus"]]) == 3
    assert run(capsys, "classify", files["torus"], "--precedence")[0] == 0


def test_json_output(files, capsys):
    code, out = run(capsys, "--json", "stats", files["g24"])
    data = json.loads(out)
    assert code == 0 and data["k"] == 1 and data["edges"] == 4


def test_tutte_of_k4(files, capsys):
    code, out = run(capsys, "tutte", files["k4"])
    assert code == 0 and out.strip() == "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y"


def test_reduce_and_trial_emit_documents(files, capsys):
    code, out = run(capsys, "reduce", files["g13"], "--edge", "e", "--op", "1")
    assert code == 0 and len(json.loads(out)["edges"]) == 2
    code, out = run(capsys, "trial", files["g13"])
    assert code == 0 and json.loads(out)["format"] == "adm-v1"


def test_minor_library_target(files, capsys):
    code, out = run(capsys, "minor", files["g24"], "--target", "g13")
    assert code == 0 and out.startswith("minor found")


def test_output_is_deterministic(files, capsys):
    first = run(capsys, "eti", files["g24"], "--all-orders", "--distinct")
    second = run(capsys, "eti", files["g24"], "--all-orders", "--distinct")
    assert first == second


def test_enumerate_writes_corpus(tmp_path, capsys):
    out = tmp_path / "c.jsonl"
    code, _ = run(capsys, "enumerate", "--edges", "2", "--connected", "--out", str(out))
    assert code == 0 and len(out.read_text().splitlines()) == 3


def test_verify_small(capsys):
    code, out = run(capsys, "verify", "--suite", "eti", "minors", "--max-edges", "3")
    assert code == 0 and "0 failed" in out
