import json
from fractions import Fraction
from itertools import product

import pytest

import gapforge as gf


def test_fixtures_load():
    assert "lc_cyc" in gf.fixture_names()
    lc = gf.fixture("lc_cyc")
    assert lc["kind"] == "label_cover"


def test_reduction_chain_shapes():
    ssat = gf.lc_to_ssat(gf.fixture("lc_cyc"))
    assert len(ssat["tests"]) == 2
    assert len(gf.fixture("lc_cyc")["a"]) == 2
    sis = gf.ssat_to_sis(ssat)
    assert len(sis["matrix"]) == 6
    assert all(len(row) == 4 for row in sis["matrix"])
    assert gf.sis_to_ncp(sis, 1)["kind"] == "ncp"
    assert gf.sis_to_lhp(sis, u=2)["kind"] == "lhp"


def brute_lc(lc):
    # value of the best labeling, by full enumeration
    best = 0
    for fa in product(lc["sigma_a"], repeat=len(lc["a"])):
        la = dict(zip(lc["a"], fa))
        for fb in product(lc["sigma_b"], repeat=len(lc["b"])):
            lb = dict(zip(lc["b"], fb))
            best = max(best, sum(e["pi"][la[e["a"]]] == lb[e["b"]] for e in lc["edges"]))
    return Fraction(best, len(lc["edges"]))


def test_lc_optimum_against_enumeration():
    lc = gf.fixture("lc_cyc")
    assert Fraction(gf.solve_lc(lc)["optimum"]) == Fraction(3, 4)
    for seed in range(5):
        g = gf.frustrate(gf.gen_lc(3, 2, 2, seed=seed), 1, seed)
        assert Fraction(gf.solve_lc(g)["optimum"]) == brute_lc(g)


def test_oracles():
    ssat = gf.lc_to_ssat(gf.fixture("lc_cyc"))
    assert gf.solve_ssat(ssat, 2, "linf")["optimum"] == "2/1"
    assert gf.solve_sis(gf.ssat_to_sis(ssat))["optimum"] == "inf"
    share = gf.ssat_to_sis(gf.lc_to_ssat(gf.fixture("lc_share")))
    r = gf.solve_sis(share)
    assert r["optimum"] == 2
    assert gf.solve_ncp(gf.sis_to_ncp(share, 1))["optimum"] == 2
    assert gf.solve_lhp(gf.sis_to_lhp(share, u=10))["optimum"] == 2


def test_chain_on_planted_instance():
    lc = gf.gen_lc(4, 3, 2, seed=11)
    chain = gf.run_chain(lc)
    assert chain["completeness"]["all_pass"]
    assert [row["stage"] for row in chain["gap_report"]["rows"]] == ["lc", "ssat", "sis", "ncp", "lhp"]


def test_errors_carry_codes():
    with pytest.raises(gf.GapforgeError) as info:
        gf.fixture("nope")
    assert info.value.code == "FileNotFound"
    with pytest.raises(gf.GapforgeError) as info:
        gf.solve_ssat(gf.fixture("lc_id2"))
    assert info.value.code == "SchemaViolation"


def test_cli_in_process():
    code, out, _ = gf.cli("solve", "lc", "--in", "/nonexistent.json")
    assert code == 1
    code, out, err = gf.cli()
    assert code == 2


def test_hash():
    assert gf.sha256_hex("abc").startswith("ba7816bf")
