import csv
import io
import json

import jsonschema
import numpy as np
import pytest

from graphsquare import diameter, g6_decode, is_connected, square
from graphsquare import families as fam
from graphsquare import verify as V
from graphsquare.spectral import spectral_radius

SCHEMA = {
    "type": "object",
    "required": ["claim", "range", "status", "witnesses", "extremal_table", "tolerances", "runtime_ms"],
    "properties": {
        "claim": {"type": "string"},
        "range": {"type": "object"},
        "status": {"enum": ["HOLDS", "VIOLATED", "UNDECIDED", "HOLDS-ON-RANGE"]},
        "witnesses": {
            "type": "array",
            "items": {"type": "object", "required": ["graph6", "values"]},
        },
        "extremal_table": {"type": "array", "items": {"type": "object"}},
        "tolerances": {"type": "object"},
        "runtime_ms": {"type": ["number", "null"]},
    },
}


def test_random_tree_is_tree():
    rng = np.random.default_rng(0)
    for n in range(1, 15):
        t = V.random_tree(n, rng)
        assert t.m == max(n - 1, 0) and is_connected(t)


def test_random_connected():
    rng = np.random.default_rng(1)
    for n in range(1, 12):
        assert is_connected(V.random_connected(n, rng))


class TestReport:
    def test_roundtrip_and_schema(self):
        r = V.check_tree_extremes(4, 7)
        data = json.loads(r.to_json())
        jsonschema.validate(data, SCHEMA)
        assert V.ClaimReport.from_json(r.to_json()) == r

    def test_csv_agrees_with_json(self):
        r = V.check_girth_max(6, 7)
        rows = list(csv.DictReader(io.StringIO(r.to_csv())))
        assert len(rows) == len(r.extremal_table)
        for row, ref in zip(rows, r.extremal_table):
            for key, value in ref.items():
                if isinstance(value, float):
                    assert float(row[key]) == value
                elif isinstance(value, bool):
                    assert row[key] == ("true" if value else "false")
                elif isinstance(value, int):
                    assert int(row[key]) == value

    def test_timing_opt_in(self):
        assert V.check_girth_lemma(6, 7).runtime_ms is None
        assert V.check_girth_lemma(6, 7, timing=True).runtime_ms >= 0


class TestCheckers:
    def test_upper_bound_connected(self):
        r = V.check_upper_bound_connected(2, 7)
        assert r.status == V.HOLDS
        row5 = next(x for x in r.extremal_table if x["n"] == 5)
        assert row5["graphs"] == 21 and row5["max_strict_gap"] > 0

    def test_upper_bound_unicyclic(self):
        assert V.check_upper_bound_unicyclic(3, 9).status == V.HOLDS

    def test_p5_strict(self):
        assert spectral_radius(square(fam.path(5))).radius < 4

    def test_tree_extremes(self):
        r = V.check_tree_extremes(4, 9)
        assert r.status == V.HOLDS
        for row in r.extremal_table:
            assert row["min_is_path"] and row["max_is_star"]
            assert row["max_radius"] == pytest.approx(row["n"] - 1, abs=1e-12)

    def test_connected_min_and_remark(self):
        r = V.check_connected_min(4, 6)
        assert r.status == V.HOLDS
        assert r.details["remark_n3"]["rho_P3_squared"] == 2
        assert r.details["remark_n3"]["rho_C3_squared"] == 2
        assert all(row["complete_among_max"] and row["max_equals_n_minus_1"] for row in r.extremal_table)

    def test_unicyclic_min(self):
        r = V.check_unicyclic_min(4, 8)
        assert r.status == V.HOLDS
        # at n = 4 the tadpole is C_3 plus a pendant, i.e. star_plus(4)
        assert r.extremal_table[0]["n"] == 4

    def test_girth_lemma(self):
        r = V.check_girth_lemma(6, 8)
        assert r.status == V.HOLDS
        assert r.extremal_table[0]["graphs"] == 1  # only C_5 plus a pendant

    def test_girth_max(self):
        r = V.check_girth_max(6, 8)
        assert r.status == V.HOLDS
        assert all(row["max_is_cycle_star"] for row in r.extremal_table)

    def test_diameter_candidates(self):
        r = V.check_diameter_candidates(8, 9)
        assert r.status == V.HOLDS
        assert r.details["maximizing_reading_holds"]
        for row in r.extremal_table:
            for g6 in row["max_graph6"]:
                assert diameter(g6_decode(g6)) == row["d"]

    def test_lemma_properties_small(self):
        r = V.check_lemma_properties(trials=40, seed=5)
        assert r.status == V.HOLDS
        assert {row["lemma"] for row in r.extremal_table} >= {
            "degree_bounds", "subgraph_monotonicity", "star_coalescence", "p3_attachment",
            "branch_relocation", "edge_rotation", "spider_vs_path", "minimizer_path_degrees",
        }
        assert r.to_json() == V.check_lemma_properties(trials=40, seed=5).to_json()

    def test_relocation_host_reading_equality_cases(self):
        host = V.check_lemma_properties(trials=60, seed=0).details["relocation_host_tilde_reading"]
        assert host["strict_failures"] == host["isomorphic_failures"]

    def test_conjecture1(self):
        r = V.scan_conjecture1(20)
        assert r.status == V.HOLDS_ON_RANGE
        assert len(r.extremal_table) == 16
        assert r.extremal_table[0]["exact_tadpole_vs_4"] == -1

    def test_conjecture2_mirror_ties(self):
        r = V.scan_conjecture2(10)
        for row in r.extremal_table:
            mirrored = {row["d"] + 2 - i for i in row["argmax_i"]}
            assert mirrored == set(row["argmax_i"])


def test_jobs_identical():
    a = V.check_unicyclic_min(4, 8, jobs=1).to_json()
    b = V.check_unicyclic_min(4, 8, jobs=3).to_json()
    assert a == b
