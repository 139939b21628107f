import json

import pytest

from pathcover.cli import main
from pathcover.families import FAMILY_NAMES
from pathcover.report import to_csv

SMALLEST = {
    "path": (2,),
    "cycle": (3,),
    "wheel": (3,),
    "double_wheel": (3,),
    "fan": (1,),
    "double_fan": (1,),
    "friendship": (3, 1),
    "complete_bipartite": (1, 1),
    "crown": (3,),
    "generalized_petersen": (3, 1),
    "hypercube": (1,),
    "butterfly": (1,),
    "augmented_butterfly": (1,),
    "enhanced_butterfly": (1,),
    "benes": (1,),
    "silicate": (1,),
    "sierpinski": (1,),
    "sierpinski_gasket": (1,),
}


def test_smallest_params_cover_every_family():
    assert set(SMALLEST) == set(FAMILY_NAMES)


@pytest.mark.parametrize("name", sorted(SMALLEST))
def test_gen_solve_verify_round_trip(name, tmp_path):
    """gen -> file -> solve -> verify (witness) at smallest parameters."""
    graph_file = tmp_path / f"{name}.edges"
    witness_file = tmp_path / f"{name}.witness"
    params = [str(p) for p in SMALLEST[name]]
    assert main(["gen", "--family", name, "--params", *params,
                 "--out", str(graph_file)]) == 0
    assert (tmp_path / f"{name}.edges.labels").exists()
    assert main(["solve", "--in", str(graph_file), "--k", "2",
                 "--variant", "strong", "--method", "exact",
                 "--witness-out", str(witness_file),
                 "--json", str(tmp_path / f"{name}.json")]) == 0
    record = json.loads((tmp_path / f"{name}.json").read_text())
    vertex_set = [str(v) for v in record["set"]]
    assert main(["verify", "--in", str(graph_file), "--k", "2",
                 "--set", *vertex_set, "--witness", str(witness_file)]) == 0


def test_verify_weak_mode(tmp_path, capsys):
    graph_file = tmp_path / "c5.edges"
    main(["gen", "--family", "cycle", "--params", "5",
          "--out", str(graph_file)])
    assert main(["verify", "--in", str(graph_file), "--k", "2",
                 "--set", "0,2"]) == 0
    assert main(["verify", "--in", str(graph_file), "--k", "2",
                 "--set", "0"]) == 1


def test_bounds_smoke(tmp_path, capsys):
    graph_file = tmp_path / "q3.edges"
    main(["gen", "--family", "hypercube", "--params", "3",
          "--out", str(graph_file)])
    assert main(["bounds", "--in", str(graph_file), "--k", "2"]) == 0
    out = capsys.readouterr().out
    assert "degree_lb = 2" in out
    assert "monitored claim" in out


def test_reduce_writes_gadget_and_roles(tmp_path, capsys):
    graph_file = tmp_path / "p3.edges"
    gadget_file = tmp_path / "gadget.edges"
    main(["gen", "--family", "path", "--params", "3",
          "--out", str(graph_file)])
    assert main(["reduce", "--in", str(graph_file), "--k", "2", "--check",
                 "--out", str(gadget_file)]) == 0
    out = capsys.readouterr().out
    assert "size formulas hold: True" in out
    assert "forward witness valid: True" in out
    roles = (tmp_path / "gadget.edges.roles").read_text().splitlines()
    assert len(roles) == 15


def test_claims_csv_export(tmp_path):
    csv_file = tmp_path / "claims.csv"
    assert main(["claims", "--family", "cycle", "--max-n", "8",
                 "--csv", str(csv_file)]) == 0
    lines = csv_file.read_text().splitlines()
    assert lines[0].startswith("schema_version,family,params")
    assert len(lines) == 5  # header + n in 5..8


def test_empty_csv_has_header():
    text = to_csv([])
    assert text.splitlines() == [
        "schema_version,family,params,n,m,variant,k,optimum,set,"
        "domination_lb,degree_lb,clique_lb,trivial_ub,order_diameter_ub,"
        "diameter_ub,half_ub,claim_status,nodes,elapsed_s"]


def test_solve_json_record_shape(tmp_path):
    graph_file = tmp_path / "c5.edges"
    json_file = tmp_path / "c5.json"
    main(["gen", "--family", "cycle", "--params", "5",
          "--out", str(graph_file)])
    main(["solve", "--in", str(graph_file), "--k", "2", "--variant",
          "strong", "--method", "exact", "--json", str(json_file)])
    record = json.loads(json_file.read_text())
    assert record["optimum"] == 2
    assert record["schema_version"] == 1
    assert record["graph"] == {"family": None, "params": None, "n": 5, "m": 5}
    assert set(record) == {"schema_version", "graph", "variant", "k",
                           "optimum", "set", "bounds", "claim_status",
                           "stats"}


def test_repeated_sweeps_byte_identical(tmp_path):
    outputs = []
    for run in (1, 2):
        csv_file = tmp_path / f"sweep{run}.csv"
        assert main(["claims", "--family", "crown", "--max-n", "10",
                     "--csv", str(csv_file)]) == 0
    outputs = [(tmp_path / f"sweep{r}.csv").read_bytes() for r in (1, 2)]
    assert outputs[0] == outputs[1]


def test_exit_code_invalid_input(tmp_path, capsys):
    assert main(["gen", "--family", "cycle", "--params", "2",
                 "--out", str(tmp_path / "x.edges")]) == 1
    assert main(["solve", "--in", str(tmp_path / "missing.edges"),
                 "--k", "2", "--variant", "weak"]) == 1


def test_exit_code_size_limit(tmp_path, capsys):
    graph_file = tmp_path / "p41.edges"
    main(["gen", "--family", "path", "--params", "41",
          "--out", str(graph_file)])
    assert main(["solve", "--in", str(graph_file), "--k", "2",
                 "--variant", "weak", "--method", "exact"]) == 2


def test_solve_methods_agree(tmp_path, capsys):
    graph_file = tmp_path / "c5.edges"
    main(["gen", "--family", "cycle", "--params", "5",
          "--out", str(graph_file)])
    for method in ("exact", "greedy", "oracle"):
        assert main(["solve", "--in", str(graph_file), "--k", "2",
                     "--variant", "strong", "--method", method]) == 0
    out = capsys.readouterr().out
    assert out.count("optimum=2") == 3
