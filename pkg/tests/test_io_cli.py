import json
import shutil

import pytest

from jumploci.cli import main
from jumploci.corpus import build_corpus, bundled_corpus_dir, corpus_matches_builders
from jumploci.io import InputError, dumps_canonical, parse_data, parse_text, parse_vector

CORPUS = bundled_corpus_dir()


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bundled_corpus_matches_builders():
    assert corpus_matches_builders() == []


@pytest.mark.parametrize("name", sorted(build_corpus()))
def test_round_trip_is_byte_identical(name):
    text = (CORPUS / f"{name}.json").read_text()
    canon = dumps_canonical(json.loads(text))
    assert dumps_canonical(parse_text(text).to_json()) == canon


def test_schema_errors_name_the_field():
    with pytest.raises(InputError, match="facets/0/1"):
        parse_data({"vertices": [1], "facets": [[1, "x"]]})
    with pytest.raises(InputError, match="Additional properties"):
        parse_data({"vertices": [1], "facets": [[1]], "extra": 1})
    with pytest.raises(InputError, match="line 1 column"):
        parse_text('{"vertices": [1],')
    with pytest.raises(InputError, match="missing from 'vertices'"):
        parse_data({"vertices": [1], "facets": [[1, 2]]})


def test_parse_vector():
    assert parse_vector("1, -1/2,0") == ["1", "-1/2", "0"]
    with pytest.raises(InputError):
        parse_vector("1,x")


def test_cm_over_gf2_exit_one(capsys):
    code, out, _ = run(capsys, "cm", "--field", "GF(2)", CORPUS / "rp2_flag.json")
    rep = json.loads(out)
    assert code == 1 and rep["verdict"] is False
    assert rep["certificate"]["witnesses"][0]["face"] == []
    assert len(rep["input_digest"]) == 64 and rep["provenance"]


def test_cm_over_q_exit_zero(capsys):
    code, out, _ = run(capsys, "cm", CORPUS / "rp2_flag.json")
    assert code == 0 and json.loads(out)["abelian_duality"] is True


def test_toric_resonance_two_cliques(capsys):
    code, out, _ = run(capsys, "toric-resonance", "--depth", "1",
                       CORPUS / "graph_two_cliques.json")
    rep = json.loads(out)
    assert code == 1
    assert rep["locus"]["layers"]["1"] == [[1, 2, 3, 4]]
    assert rep["locus"]["layers"]["2"] == [[1, 2], [3, 4]]
    assert rep["propagation"]["propagates"] is False


def test_fox_genus_two(capsys):
    code, out, _ = run(capsys, "fox", "--char", "2,1,1,1", CORPUS / "genus2.json")
    assert code == 0 and json.loads(out)["cohomology"] == [0, 2, 0]


def test_os_and_os_resonance(capsys):
    code, out, _ = run(capsys, "os", CORPUS / "square_triangle.json")
    assert code == 0 and json.loads(out)["projective_dims"] == [1, 5, 9, 6]
    code, out, _ = run(capsys, "os-resonance", "--point", "1,-1,1,-1,0,0",
                       CORPUS / "square_triangle.json")
    rep = json.loads(out)
    assert code == 0 and rep["projective_h"][1] == 0 and rep["propagates"]


def test_bgg_and_bb(capsys):
    assert run(capsys, "bgg-check", "--bound", "4", CORPUS / "octahedron.json")[0] == 0
    assert run(capsys, "bgg-check", "--bound", "3", CORPUS / "two_edges.json")[0] == 1
    assert run(capsys, "bb-check", CORPUS / "graph_k4.json")[0] == 0
    assert run(capsys, "bb-check", CORPUS / "graph_cycle5.json")[0] == 1


def test_structural_commands(capsys):
    code, out, _ = run(capsys, "link", "--face", "1", CORPUS / "octahedron.json")
    assert json.loads(out)["complex"]["facets"] == [[3, 5], [3, 6], [4, 5], [4, 6]]
    code, out, _ = run(capsys, "flag", CORPUS / "graph_k4.json")
    assert json.loads(out)["complex"]["facets"] == [[1, 2, 3, 4]]
    code, out, _ = run(capsys, "dual", CORPUS / "tetrahedron_boundary.json")
    assert json.loads(out)["complex"]["facets"] == [[]]
    code, out, _ = run(capsys, "wedge", "--mult", "2,1,1", CORPUS / "triangle_boundary.json")
    assert code == 0 and len(json.loads(out)["complex"]["facets"]) == 4
    code, out, _ = run(capsys, "compose", CORPUS / "edge.json", CORPUS / "point.json",
                       CORPUS / "point.json")
    assert code == 2  # overlapping vertex sets


def test_propagation_and_aomoto(capsys):
    assert run(capsys, "propagation", CORPUS / "octahedron.json")[0] == 0
    assert run(capsys, "propagation", CORPUS / "two_edges.json")[0] == 1
    assert run(capsys, "propagation", "--samples", "5", CORPUS / "square_triangle.json")[0] == 0
    code, _, _ = run(capsys, "propagation", "--char", "1,3,1", CORPUS / "one_relator_wedge.json")
    assert code == 1
    code, out, _ = run(capsys, "aomoto", "--point", "1,1", CORPUS / "two_points.json")
    assert json.loads(out)["points"][0]["cohomology"] == [0, 1]


def test_input_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [1], "facets": [[1, -2]]}')
    code, _, err = run(capsys, "cm", bad)
    assert code == 2 and "facets/0/1" in err
    assert run(capsys, "cm", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "cm", "--field", "GF(4)", CORPUS / "point.json")[0] == 2
    assert run(capsys, "toric-resonance", "--field", "Z", CORPUS / "point.json")[0] == 2
    assert run(capsys, "fox", "--char", "2", CORPUS / "genus2.json")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_reports_are_deterministic(capsys):
    argv = ("propagation", "--seed", "5", CORPUS / "square_triangle.json")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_pretty_has_the_same_numbers(capsys):
    _, out, _ = run(capsys, "os", "--pretty", CORPUS / "square_triangle.json")
    assert "projective_dims: [1, 5, 9, 6]" in out


def test_corpus_verify_subset(capsys):
    code, out, err = run(capsys, "corpus-verify", "--only", "fox")
    rep = json.loads(out)
    assert code == 0 and {c["criterion"] for c in rep["criteria"]} == {6, 8}
    assert "criterion 6" in err


def test_corrupted_corpus_exits_two(capsys, tmp_path):
    d = tmp_path / "corpus"
    shutil.copytree(CORPUS, d)
    (d / "genus2.json").write_text('{"generators": "four", "relators": []}')
    code, _, err = run(capsys, "corpus-verify", "--corpus", d)
    assert code == 2 and "genus2.json" in err and "generators" in err
