import json

import pytest

import svalgebra as sva


def test_normal_form_text():
    assert sva.normal_form("M0") == "M0"
    assert sva.normal_form("L1 L-1 - L-1 L1") == "-2 L0"
    assert sva.normal_form("0") == "0"


def test_normal_form_json():
    terms = json.loads(sva.normal_form_json("L1 L-1"))
    assert isinstance(terms, list)
    words = {t["word"]: t["coeff"] for t in terms}
    assert words["L0"] == "-2"
    assert words["L-1 L1"] == "1"


def test_bracket():
    assert sva.bracket("L1", "L-1") == "-2 L0"
    assert sva.bracket("L1", "Y0") == "0"
    assert sva.bracket("M3", "M-3") == "0"


def test_parse_error_raises():
    with pytest.raises(ValueError):
        sva.normal_form("L1 +")


def test_act_and_dot_act():
    spec = sva.universal(m1="5")
    v = sva.act_dict("M1", "w", spec)
    assert v == [{"index": {"k": 0, "mu": [], "nu": [], "lambda": []}, "coeff": "5"}]
    assert json.loads(sva.dot_act("M1", "w", spec)) == []
    assert sva.render_vector(sva.act("L-2", "w", spec)) == "L-2 w"


def test_whittaker_dimensions():
    uni = sva.universal(eta1="2", eta2="5", m1="1", eta3="3")
    rep = sva.whittaker_dict(uni, deg="2", l0=2, m0=2)
    assert rep["dimension"] == 3

    quo = sva.quotient(eta1="2", eta2="5", m1="1", eta3="3", xi="-2")
    rep = sva.whittaker_dict(quo, deg="2", l0=2, m0=0)
    assert rep["dimension"] == 1
    assert rep["basis"][0] == [
        {"index": {"k": 0, "mu": [], "nu": [], "lambda": []}, "coeff": "1"}
    ]


def test_verma_singular():
    rep = sva.singular_dict(sva.verma(xi="1", zeta="0"), deg="3", l0=0, m0=0)
    assert rep["dimension"] == 1
    rep0 = sva.singular_dict(sva.verma(xi="0", zeta="0"), deg="2", l0=0, m0=0)
    assert rep0["dimension"] >= 2


def test_nilpotency():
    assert sva.nilpotency_index("M2", "w", sva.universal(m1="1")) == 1
    deep = json.dumps([{"index": {"lambda": [1, 1, 1]}, "coeff": "1"}])
    assert sva.nilpotency_index("M1", deep, sva.universal(m1="1"), 1) is None


def test_closure():
    seed = [[{"index": {"lambda": [2]}, "coeff": "1"}]]
    rep = sva.closure_dict(seed, sva.quotient(xi="0"), deg="3", l0=3, m0=0)
    assert rep["dimension"] >= 1
    # the quotient cyclic vector stays outside its proper submodule
    for v in rep["basis"]:
        assert all(t["index"] != {"k": 0, "mu": [], "nu": [], "lambda": []} for t in v)


def test_verify_subset():
    checks = sva.verify(only="straightening-closed-form")
    assert len(checks) == 1
    assert checks[0]["pass"] is True

    bad = sva.verify(only="lie-axioms", corrupt=True)
    assert bad[0]["pass"] is False
