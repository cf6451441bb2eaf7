import pytest

import ucg


def test_graph_roundtrip_and_queries():
    sq = ucg.Graph.cycle(4)
    assert sq.order == 4
    assert sq.edge_count() == 4
    assert ucg.Graph.from_graph6(sq.to_graph6()) == sq
    assert ucg.Graph.from_edgelist(sq.to_edgelist()) == sq
    assert sq.neighbors(0) == [1, 3]
    assert ucg.is_connected(sq)


def test_recognize_and_construct():
    assert ucg.recognize(ucg.Graph.cycle(4)) == [2, 2]
    assert ucg.recognize(ucg.Graph.cycle(5)) is None
    assert ucg.construct([2, 2]).to_graph6() == "C]"
    assert ucg.chromatic_number(ucg.Graph.cycle(5)) == 3
    assert len(ucg.enumerate_proper_partitions(ucg.Graph.cycle(5), 3)) == 5
    assert ucg.is_upper_critical_def(ucg.construct([3, 1, 1]))


def test_transform_records():
    g, rec = ucg.contract_edge(ucg.Graph.cycle(4), 0, 1)
    assert g == ucg.Graph.complete(3)
    assert rec["predicted"] == {"order": 3, "chroma": 3}
    assert rec["actual"] == {"order": 3, "chroma": 3}
    assert rec["preserved"]

    g, rec = ucg.add_edge_with_conditions(ucg.construct([3, 3]), 0, 1)
    assert rec["conditions"]["cond1_strict"]
    assert rec["preserved"] == ucg.is_upper_critical_def(g)


def test_counting_and_table():
    assert ucg.count_partitions(5, 3) == 2
    assert ucg.partitions_of(5, 2) == [[4, 1], [3, 2]]
    table = ucg.emit_table(5, as_json=True)
    assert table[4][1] == ["{1,4}", "{2,3}"]
    assert "K_5" in ucg.emit_table(5)


def test_verifier():
    names = ucg.theorems()
    assert len(names) == 12
    report = ucg.verify_theorem("KPARTITE_EQUIV", max_n=4, signature_max_n=4)
    assert report["status"] == "verified"
    assert report["cases_checked"] == 75
    report = ucg.verify_theorem("ADD_EDGE_CONDS")
    assert report["status"] in ("verified", "falsified")
    with pytest.raises(ValueError):
        ucg.verify_theorem("NOPE")


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        ucg.Graph.from_graph6("C~~")
