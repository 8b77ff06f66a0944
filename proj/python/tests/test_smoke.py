from fractions import Fraction

import pytest

import mgl


def test_validate_reports_the_exchange_pair():
    ok, msg = mgl.validate("matroid", {"d": 2, "n": 4, "support": [[0, 1], [2, 3]]})
    assert not ok
    assert "({0,1,2},{3})" in msg
    assert mgl.validate("chirotope", {"d": 2, "n": 4, "signs": [1, 1, 1, -1, -1, 1]}) == (True, "")


def test_malformed_input_raises():
    with pytest.raises(mgl.InputError):
        mgl.validate("matroid", "{not json")
    with pytest.raises(mgl.Error):
        mgl.validate("nonsense", {})


def test_rank_one_macphersonian():
    P = mgl.macp(1, 3)
    assert len(P["elements"]) == 13
    f = mgl.macp_f_vector(1, 3)
    assert f == [13, 36, 24]
    assert mgl.euler_characteristic(f) == 1


def test_order_complex_of_a_chain():
    leq = [[True, True, True], [False, True, True], [False, False, True]]
    assert mgl.order_complex_f_vector(leq) == [3, 3, 1]


def test_guard():
    with pytest.raises(mgl.GuardError):
        mgl.macp(3, 7)


def test_uniform_dressian_cells():
    cells = mgl.dressian_cells(2, 4)
    assert len(cells) == 39


def test_direct_sum_and_slide():
    a = {"d": 1, "n": 2, "entries": [{"basis": [0], "q": 1}, {"basis": [1], "q": "-1/2"}]}
    b = {"d": 1, "n": 1, "entries": [{"basis": [0], "q": 1}]}
    s = mgl.direct_sum(a, b)
    assert s["d"] == 2
    got = {tuple(e["basis"]): (e["sign"], e["val"]) for e in s["entries"]}
    assert got == {(0, 2): (1, "0"), (1, 2): (-1, "1")}

    out = mgl.slide(b, [{"map": {"0": 5}}, {"map": {"0": 9}}], [Fraction(1, 2), Fraction(1, 2)])
    assert [e["val"] for e in out["entries"]] == ["1", "1"]


def test_law_checks():
    laws = mgl.check_operad_laws(seed=1, max_set_size=2, max_window=10)
    assert laws["failures"] == [] and laws["associativity_checks"] > 0
    action = mgl.check_action_compatibility(seed=1, trials=4)
    assert action["failures"] == [] and action["trials"] == 4


def test_fiber_report():
    r = mgl.fiber_report(1, 3)
    assert r["violations"] == [] and r["final_object_not_I"] == 0
