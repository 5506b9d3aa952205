"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import polysieve

P5_TEXT = "5 4\n0 1\n1 2\n2 3\n3 4\n"
PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
]


def test_graph_construction_and_parsing():
    g = polysieve.parse_graph(P5_TEXT)
    assert g.vertex_count == 5
    assert g.edge_count == 4
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 2)

    h = polysieve.Graph(3, [(0, 1), (1, 2)])
    assert h.edge_count == 2
    with pytest.raises(ValueError):
        h.add_edge(0, 0)
    with pytest.raises(ValueError):
        polysieve.parse_graph("2 1\n0 0\n")


def test_k_path_detection():
    g = polysieve.parse_graph(P5_TEXT)
    assert polysieve.has_k_path_bf(g, 5)
    assert any(polysieve.detect_k_path(g, 5, seed=s)["found"] for s in range(10))

    star = polysieve.Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert not polysieve.has_k_path_bf(star, 4)
    assert not any(polysieve.detect_k_path(star, 4, seed=s)["found"] for s in range(50))


def test_determinism():
    g = polysieve.parse_graph(P5_TEXT)
    first = polysieve.detect_k_path(g, 5, seed=3)
    second = polysieve.detect_k_path(g, 5, seed=3)
    assert first == second
    assert first["k1"] == 2 and first["l2"] == 1


def test_set_packing():
    family = polysieve.SetFamily(6, 3, [[0, 1, 2], [3, 4, 5]])
    assert polysieve.has_p_packing_bf(family, 2)
    assert any(polysieve.detect_set_packing(family, 2, seed=s)["found"] for s in range(10))

    overlap = polysieve.SetFamily(6, 3, [[0, 1, 2], [2, 3, 4]])
    assert not any(
        polysieve.detect_set_packing(overlap, 2, seed=s)["found"] for s in range(30)
    )


def test_qdim_packing():
    family = polysieve.PartiteFamily(3, 2, [[0, 2, 4], [1, 3, 5]])
    assert polysieve.has_qdim_packing_bf(family, 2)
    assert any(polysieve.detect_qdim_packing(family, 2, seed=s)["found"] for s in range(10))

    shared = polysieve.PartiteFamily(3, 2, [[0, 2, 4], [1, 3, 4]])
    assert not any(
        polysieve.detect_qdim_packing(shared, 2, seed=s)["found"] for s in range(30)
    )


def test_edge_coloring():
    k4 = polysieve.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert polysieve.edge_chromatic_bf(k4) == 3
    assert any(polysieve.detect_edge_coloring(k4, seed=s)["found"] for s in range(10))

    petersen = polysieve.Graph(10, PETERSEN_EDGES)
    assert polysieve.edge_chromatic_bf(petersen) == 4
    assert not any(
        polysieve.detect_edge_coloring(petersen, seed=s)["found"] for s in range(10)
    )

    triangle = polysieve.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert not any(
        polysieve.detect_edge_coloring(triangle, seed=s, general=True)["found"]
        for s in range(30)
    )

    path = polysieve.Graph(3, [(0, 1), (1, 2)])
    assert any(
        polysieve.detect_edge_coloring(path, seed=s, general=True)["found"]
        for s in range(10)
    )
    with pytest.raises(ValueError):
        polysieve.detect_edge_coloring(path, seed=0)  # not regular


def test_probabilities_are_exact_fractions():
    assert polysieve.admissible_probability(5, 2, 1) == Fraction(3, 16)
    assert polysieve.admissible_probability(3, 3, 0) == Fraction(1, 8)
    assert polysieve.packing_admissible_probability(4, 1, 3, 1, 0, 1, 0) == Fraction(3, 4)

    params = polysieve.choose_path_parameters(5)
    assert (params["k1"], params["l2"], params["repetitions"]) == (2, 1, 6)


def test_beta_search_matches_table():
    found = polysieve.packing_beta_search(3)
    assert abs(found["beta1"] - 0.281509) < 0.002
    assert abs(found["beta2"] - 0.679622) < 0.002
    assert abs(found["base"] - 3.3432) < 0.01


def test_encoding_round_trip():
    k4 = polysieve.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    family = polysieve.encode_graph_packing(k4, "vertex-triangle")
    assert len(family) == 4
    text = polysieve.format_family(family)
    reparsed = polysieve.parse_family(text)
    assert reparsed.members() == family.members()


def test_run_cli(tmp_path):
    graph_file = tmp_path / "p5.graph"
    graph_file.write_text(P5_TEXT)
    code, out, err = polysieve.run_cli(
        ["kpath", "--input", str(graph_file), "--k", "5", "--seed", "4"]
    )
    assert code == 0
    assert '"problem": "kpath"' in out

    code, out, err = polysieve.run_cli(["kpath", "--input", "missing.graph", "--k", "2"])
    assert code == 2


def test_selftest():
    report = polysieve.run_selftest(0)
    assert report["failed"] == 0
    assert report["passed"] > 0
