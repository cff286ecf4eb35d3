import json

import pytest
from hypothesis import given

from families import SHEAR, two_path, matrix_sets, quadratic, triangular_sets
from hypothesis import strategies as st
from matgrowth.classifier import classify
from matgrowth.io import (
    RunReport,
    SchemaError,
    parse_labelled_graph,
    parse_matrix_set,
    read_input,
    verdict_from_dict,
    verdict_to_dict,
    witness_from_dict,
    witness_to_dict,
)


def test_parse_matrix_set():
    S, name = parse_matrix_set('{"name": "shear", "matrices": [[[1, 1], [0, 1]]]}')
    assert S.tolist() == [SHEAR] and name == "shear"
    S, name = parse_matrix_set('{"matrices": [[[123456789012345678901234567890]]]}')
    assert S[0][0, 0] == 123456789012345678901234567890 and name is None


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"matrices": [[[1, 1], [0', "x.json:1:"),
        ("[1, 2]", "'matrices'"),
        ('{"matrices": 3}', "list of row-major"),
        ('{"matrices": [[1, 2]]}', "matrices[0]"),
        ('{"matrices": [[[1, -1], [0, 1]]]}', "negative"),
        ('{"matrices": [[[1, 0]]]}', "row 0"),
        ('{"matrices": [[[1]]], "name": 4}', "'name'"),
        ('{\n  "matrices": [[[1]]],\n  oops\n}', "x.json:3:"),
    ],
)
def test_parse_matrix_set_errors(text, fragment):
    with pytest.raises(SchemaError) as info:
        parse_matrix_set(text, "x.json")
    assert fragment in str(info.value)


def test_parse_labelled_graph_renumbers():
    G = parse_labelled_graph(
        '{"nodes": [{"id": 7, "label": "b"}, {"id": 3, "label": "a"}], "edges": [[3, 7], [7, 7]]}'
    )
    assert G.labels == ("a", "b")
    assert G.edges == frozenset({(0, 1), (1, 1)})


@pytest.mark.parametrize(
    "doc",
    [
        {"nodes": []},
        {"nodes": [{"id": 0, "label": "a"}], "edges": []},
        {"nodes": [{"id": 1, "label": "a"}, {"id": 1, "label": "b"}], "edges": []},
        {"nodes": [{"id": 1, "label": ""}], "edges": []},
        {"nodes": [{"id": 1, "label": "a"}], "edges": [[1, 2]]},
        {"nodes": [{"id": 1, "label": "a"}], "edges": [[1]]},
        {"nodes": [{"label": "a"}], "edges": []},
    ],
)
def test_parse_labelled_graph_errors(doc):
    with pytest.raises(SchemaError):
        parse_labelled_graph(json.dumps(doc))


def test_read_input(tmp_path):
    p = tmp_path / "m.json"
    p.write_bytes(b'{"matrices": [[[1]]]}')
    text, digest = read_input(p)
    assert text.startswith("{") and digest.startswith("sha256:") and len(digest) == 71
    bad = tmp_path / "bad.json"
    bad.write_bytes(b'{\n"x": "\xff"}')
    with pytest.raises(SchemaError, match="bad.json:2"):
        read_input(bad)
    with pytest.raises(SchemaError):
        read_input(tmp_path / "missing.json")


def test_verdict_schema_shape():
    d = verdict_to_dict(classify(two_path()))
    assert d == {
        "class": "exponential",
        "scc_count": 1,
        "witness": {"kind": "exponential", "words": [[0, 1]], "indices": [1], "diagonal": 2},
    }
    d = verdict_to_dict(classify(quadratic()))
    assert d["degree"] == 2
    assert d["witness"]["indices"] == [[0, 1], [1, 2]]
    assert d["witness"]["connectors"] == [[]]


def test_unknown_witness_kind():
    with pytest.raises(SchemaError):
        witness_from_dict({"kind": "mystery"})


@given(st.one_of(matrix_sets(), triangular_sets()))
def test_verdict_round_trip(S):
    v = classify(S)
    assert verdict_from_dict(json.loads(json.dumps(verdict_to_dict(v)))) == v
    assert witness_from_dict(witness_to_dict(v.witness)) == v.witness


@given(st.one_of(matrix_sets(), triangular_sets()), st.booleans())
def test_report_round_trip(S, timed):
    report = RunReport(
        "classify",
        "sha256:0",
        classify(S),
        oracle={"class": "bounded", "max_t": [1, 2]},
        extra={"k": [1]},
        wall_time=0.25 if timed else None,
    )
    again = RunReport.from_dict(json.loads(report.to_json()))
    assert again == report
    assert again.to_json() == report.to_json()
