"""Smoke tests for the python module: a handful of known values per area."""

import math

import pytest

import homops as h


def g(text):
    return h.parse_group(text)


def test_group_canonicalization():
    assert str(g("Z/2 + Z/3")) == "Z/6"
    assert str(g("Z^2 + Z/4 + Z/6")) == "Z^2 + Z/2 + Z/12"
    assert g("Z/4 + Z/6").invariant_factors == [2, 12]
    assert g("0").is_trivial()
    with pytest.raises(ValueError):
        g("Z/1")


def test_group_order_and_torsion():
    assert g("Z/3 + Z/9").order() == 27
    assert g("Z + Z/2").order() == math.inf
    assert g("Z/12").has_2_torsion()
    assert not g("Z/9").has_2_torsion()


def test_smith_normal_form():
    diag, smith = h.smith_normal_form([[2, 4], [6, 8]])
    assert diag == [2, 4]
    assert smith[0][0] == 2 and smith[1][1] == 4
    big = 10**24
    diag_big, _ = h.smith_normal_form([[big]])
    assert diag_big == [big]


def test_cokernel():
    assert h.cokernel([[2, 0, 0], [0, 4, 0]]) == g("Z + Z/2 + Z/4")


def test_functors_and_oracles():
    assert h.tensor(g("Z/4"), g("Z/6")) == g("Z/2")
    assert h.tor(g("Z/9"), g("Z/3")) == g("Z/3")
    assert h.hom(g("Z/7"), g("Z")).is_trivial()
    assert h.ext(g("Z/5"), g("Z")) == g("Z/5")
    assert h.oracle_hom_count(g("Z/4"), g("Z/6")) == 2
    assert h.oracle_tensor(g("Z/4"), g("Z/6")) == g("Z/2")
    assert h.oracle_tor(g("Z/9"), g("Z/3")) == g("Z/3")
    assert h.oracle_ext(g("Z/4"), g("Z/6")) == g("Z/2")


def test_chain_homology():
    c = h.moore_complex(g("Z/6"), 4)
    assert h.homology(c, 4) == g("Z/6")
    t = h.tensor_complex(h.moore_complex(g("Z/4"), 4), h.moore_complex(g("Z/6"), 5))
    assert h.homology(t, 9) == g("Z/2")
    assert h.homology(t, 10) == g("Z/2")
    assert h.kunneth_check(g("Z/3"), 4, g("Z/3"), 4)["pass"] is True


def test_moore_calculus():
    d = h.smash_decompose(h.MooreExpr.parse("Z/3@4"), h.MooreExpr.parse("Z/3@4"))
    assert str(d) == "Z/3@8 | Z/3@9"
    with pytest.raises(ValueError):
        h.smash_decompose(h.MooreExpr.parse("Z/2@4"), h.MooreExpr.parse("Z/6@4"))
    assert h.stem(g("Z"), 1, 7) == g("Z/2")
    assert h.stem(g("Z/3"), 1, 8).is_trivial()
    assert h.stem(g("Z/5"), 3, 9) is None
    uct = h.homotopy_with_coeffs(h.MooreExpr.parse("Z/3@8"), 8, g("Z/3"))
    assert uct.ext_term.is_trivial()
    assert uct.hom_term == g("Z/3")
    assert uct.middle_cardinality == 3


def test_operation_classification():
    assert h.basic_range_check(g("Z/3"), g("Z/3"), g("Z/3"), 4, 4, 7) == "yes"
    assert h.special_kind(g("Z/6"), g("Z/4"), g("Z/2"), 5, 5, 9) == "whitehead-candidate"
    assert h.triviality_check(g("Z/2"), g("Z/2"), g("Z/2"), 4, 4, 5) is True
    assert h.count_whitehead(g("Z/3"), g("Z/3"), 4, 4) == 3
    assert h.count_whitehead(g("Z"), g("Z"), 3, 5) == 1
    bo = h.bo_group(g("Z"), g("Z"), g("Z/7"), 4, 5, 7)
    assert bo.middle_cardinality == 7
    assert h.torsion_exists(4, 6, 4, 4) is True
    assert h.torsion_exists(2, 2, 4, 4) is False
    assert h.commutativity_sign("whitehead", 3, 4) == (12, 1)
    assert h.commutativity_sign("torsion", 4, 4) == (17, -1)
    ops = h.ext_ops_enumerate(5, 3, 3)
    assert len(ops) == 5 and ops[0]["is_zero"] is True
    assert h.neisendorfer_shift(7, "to-co-moore") == 8
    report = h.classify(g("Z/3"), g("Z/3"), g("Z/3"), 4, 4, 7)
    assert report["special_kind"] == "whitehead-candidate"
    assert report["special_count"] == 3
    assert report["bo"]["middle_cardinality"]["value"] == 9


def test_maps_identities():
    passed, suites = h.maps_check()
    assert passed is True
    assert all(s["pass"] for s in suites)
