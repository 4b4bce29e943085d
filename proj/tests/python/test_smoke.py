"""Smoke tests for the python bindings.

These keep to surface checks: the C++ test binaries already exercise the
algorithms in depth, so here we only verify that the module imports, the
wrappers round-trip JSON into sane dictionaries, and errors map to
NilgraphError.
"""

import json

import pytest

import nilgraph
from nilgraph import NilgraphError


def test_import_surface():
    assert nilgraph.__version__
    for name in nilgraph.__all__:
        assert hasattr(nilgraph, name), name


def test_builtin_group_basics():
    g = nilgraph.builtin("S3")
    assert g.order == 6
    assert len(g) == 6
    assert g.name == "S3"
    assert "S3" in repr(g)
    assert g.prime_divisors() == [2, 3]
    g.validate()

    e = g.identity()
    labels = g.labels()
    assert len(labels) == 6 and len(set(labels)) == 6
    assert g.label(e) == labels[e]
    for x in range(6):
        assert g.mul(x, g.inv(x)) == e
        assert g.element_order(x) in (1, 2, 3)
        assert g.conjugate(x, e) == x
        assert g.commutator(x, x) == e


def test_list_builtins_contains_required_families():
    names = nilgraph.list_builtins()
    for required in ("S3", "S4", "A5", "D12", "Q8", "PSL(2,7)", "PSL(2,8)"):
        assert required in names


def test_analyze_s3_report():
    report = nilgraph.analyze(nilgraph.builtin("S3"))
    assert report["group"]["order"] == 6
    cls = report["classification"]
    assert cls["nilpotent"] is False
    assert cls["nilpotency_class"] is None
    assert cls["solvable"] is True
    full = report["full_graph"]
    assert (full["vertices"], full["edges"]) == (6, 9)
    reduced = report["reduced_graph"]
    assert (reduced["vertices"], reduced["edges"]) == (5, 9)
    assert reduced["planar"] is True
    assert reduced["clique_number"] == 4
    assert reduced["diameter"] == 2
    assert report["sets"]["nil_of_group"]["size"] == 1
    assert "timings_ms" not in report


def test_analyze_q8_nilpotent():
    report = nilgraph.analyze(nilgraph.builtin("Q8"))
    assert report["classification"]["nilpotent"] is True
    assert report["classification"]["nilpotency_class"] == 2
    assert report["reduced_graph"]["vertices"] == 0
    assert report["full_graph"]["edges"] == 0


def test_analyze_timings_opt_in():
    report = nilgraph.analyze(nilgraph.builtin("S3"), timings=True)
    assert "timings_ms" in report


def test_analyze_deterministic_across_threads():
    g = nilgraph.builtin("S4")
    assert nilgraph.analyze(g, threads=1) == nilgraph.analyze(g, threads=4)


def test_analyze_text_report():
    text = nilgraph.analyze_text(nilgraph.builtin("S3"))
    assert "S3" in text
    assert "classification" in text
    assert "timings" not in text


def test_load_cayley(tmp_path):
    path = tmp_path / "c3.cayley"
    path.write_text(
        "3\n0 1 2\n1 2 0\n2 0 1\nlabel 0 e\nlabel 1 a\nlabel 2 a2\n"
    )
    g = nilgraph.load_cayley(str(path))
    assert g.order == 3
    assert g.labels() == ["e", "a", "a2"]
    assert g.mul(1, 2) == 0


def test_load_perms(tmp_path):
    path = tmp_path / "s3.perms"
    path.write_text("# two generators\n(1 2)\n(1 2 3)\n")
    g = nilgraph.load_perms(str(path))
    assert g.order == 6
    with pytest.raises(NilgraphError):
        nilgraph.load_perms(str(path), cap=4)


def test_errors_map_to_nilgraph_error(tmp_path):
    with pytest.raises(NilgraphError):
        nilgraph.builtin("D7")
    with pytest.raises(NilgraphError):
        nilgraph.load_cayley(str(tmp_path / "missing.cayley"))
    bad = tmp_path / "bad.cayley"
    bad.write_text("2\n0 1\n0 1\n")
    with pytest.raises(NilgraphError):
        nilgraph.load_cayley(str(bad))


def test_run_suite_subset():
    result = nilgraph.run_suite(corpus=["S3", "S4"], only=["P2.1", "T3.1"])
    assert result["corpus"] == ["S3", "S4"]
    ids = [c["id"] for c in result["claims"]]
    assert ids == ["P2.1", "T3.1"]
    for claim in result["claims"]:
        assert claim["verdict"] in ("pass", "reported")
        assert claim["anchor"]
    assert result["timings"] == {}


def test_run_suite_text():
    text = nilgraph.run_suite_text(corpus=["S3", "S4"], only=["P2.1"])
    assert "[pass] P2.1" in text
    assert "suite: PASS" in text


def test_claim_ids_and_default_corpus():
    ids = nilgraph.claim_ids()
    assert len(ids) >= 30
    assert len(set(ids)) == len(ids)
    assert "P2.1" in ids

    names = nilgraph.default_corpus()
    assert "S3" in names and "A5" in names and "PSL(2,7)" in names


def test_export_dot():
    g = nilgraph.builtin("S3")
    dot = nilgraph.export_dot(g, graph="reduced")
    assert dot.startswith("graph")
    assert dot.count(" -- ") == 9
    assert nilgraph.export_dot(g) == nilgraph.export_dot(g, graph="full")
    with pytest.raises(NilgraphError):
        nilgraph.export_dot(g, graph="bogus")


def test_json_wrappers_match_core_strings():
    g = nilgraph.builtin("D12")
    raw = json.loads(nilgraph._core.analyze_json(g))
    assert nilgraph.analyze(g) == raw
