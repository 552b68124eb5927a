import pytest

import uptori


def test_upcycle_report():
    r = uptori.verify_upcycle("001*110*", 4)
    assert r["valid"]
    assert r["diamondicity"] == 1


def test_invalid_upcycle_lists_missing_words():
    r = uptori.verify_upcycle("001*111*", 4)
    assert not r["valid"]
    assert r["missing_total"] > 0


def test_grid_fixture_round_trip():
    text = uptori.fixture_text("minimal")
    assert uptori.verify_grid(text, "2x2")["valid"]
    assert "upmatrix_3x5" in uptori.fixture_names()


def test_family_cross_duplicate():
    r = uptori.verify_family(uptori.fixture_text("S_invalid"), 4)
    assert not r["valid"]
    assert r["cross_member_total"] > 0


def test_generators_and_lift():
    assert uptori.debruijn(2, 2) == [0, 0, 1, 1]
    assert uptori.lift("003*112*", 4, 4) == "00301120003111210032112200331123"


def test_torus_from_upcycle():
    text = uptori.torus_from_upcycle("001*110*", 4, 2)
    assert text.startswith("64 8 2 torus")
    assert uptori.verify_grid(text, "3x4")["valid"]


def test_search_minimal_torus():
    r = uptori.search(2, "2x2", "3x4", mode="torus")
    assert r["canonical_count"] == 1
    assert r["raw_count"] == 48


def test_errors_raise():
    with pytest.raises(uptori.UptoriError):
        uptori.verify_grid("1 2 2 cube\n01\n", "2x2")
