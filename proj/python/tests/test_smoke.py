import pytest

import qchar


def test_sl3_character():
    c = qchar.character(2, "1,1")
    assert c["schema"] == 1
    assert c["schur"] == {"(2,1,0)": [[0, 1]], "(1,1,1)": [[-1, 1]]}
    assert c["multiplicities"] == {"w1+w2": [[0, 1]], "0": [[-1, 1]]}


def test_list_input_matches_text():
    assert qchar.character(2, [[1, 0], [0, 1]]) == qchar.character(2, "1,0;0,1", level=2)


def test_sl2_character():
    c = qchar.character(1, [[2]])
    assert c["schur"] == {"(2,0)": [[0, 1]], "(1,1)": [[-1, 1]]}


def test_verify_small_suite():
    r = qchar.verify("eigen", rank=2, bound=3)
    assert r["pass"]
    assert all(rep["failures"] == 0 for rep in r["reports"])


def test_errors():
    assert "all" in qchar.suite_names()
    with pytest.raises(ValueError):
        qchar.verify("nonsense")
    with pytest.raises(ValueError):
        qchar.character(2, "1,x")
