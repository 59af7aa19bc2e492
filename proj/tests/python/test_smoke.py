import pytest

import eolab


def test_members_of_eight():
    members = eolab.gen_eo_star(8)
    assert members == [(8,), (4, 2, 2), (3, 3, 2), (3, 3, 1, 1), (1,) * 8]
    assert [eolab.eoc(p) for p in members] == [8, 4, 0, -4, -8]
    assert eolab.classify_eo((3, 3, 2)) == "EO2"
    assert not eolab.is_eo_star((3, 2, 2))


def test_tables():
    rows = eolab.eo_table(8)
    assert rows[6] == (6, 2, 2)
    assert rows[8] == (8, 4, 1)
    assert eolab.eobar_table(4)[4] == (4, 4, 0)
    assert eolab.crank_distribution(8) == {-8: 1, -4: 1, 0: 1, 4: 1, 8: 1}


def test_series():
    crank = eolab.crank_series(8)
    assert crank[(4, 4)] == 1 and crank[(-4, 4)] == 1
    plain = eolab.eobar_series(4, weighted=False)
    assert plain[(0, 2)] == 2 and plain[(1, 2)] == 2


def test_verify():
    names = [name for name, _ in eolab.catalog()]
    assert "eq1" in names and "theorem2" in names
    (report,) = eolab.verify("eq1", order=20)
    assert report["passed"] and report["mismatch"] is None
    reports = eolab.verify("lemma1", order=12, r=3)
    assert [r["params"] for r in reports] == [{"r": 3}]
    with pytest.raises(eolab.ParameterError):
        eolab.verify("nope")


def test_bijections():
    assert eolab.phi((2,), (2, 2), 0) == ((), (3, 3), "CASE3(s=1)")
    assert eolab.phi((), (3, 3), 0, inverse=True) == ((2,), (2, 2), "CASE3(s=1)")
    assert eolab.lemma2((1,), (1,), 0) == ((1, 1), (3, 3))
    assert eolab.lemma3((), (2,), 0) == ((), (3, 3, 2))
    assert eolab.crank_bijection((1, 1), (3, 3), 0) == ((), (3, 3, 2), "CASE2")
    with pytest.raises(eolab.DomainError):
        eolab.phi((1,), (3,), 0)


def test_harness():
    report = eolab.run_harness("phi", 1, 10)
    assert report["passed"]
    assert report["domain_size"] == report["codomain_size"] > 0
