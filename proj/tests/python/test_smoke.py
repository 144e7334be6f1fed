"""Smoke tests for the Python bindings.

The heavy lifting is validated by the C++ unit and acceptance suites; here we
check that the module loads, the main operations round-trip through Python,
and the pinned values of the running example survive the binding layer.
"""

import os

import pytest

import wreath_products as wp

W_TEXT = "( (1,2)(3,4), (3,4), (), (1,2), (1,2,3), (), (1,2), () ; (1,2)(3,4)(5,6) )"
V_TEXT = "( (3,4), (), (), (1,2,3), (1,2), (), (), (3,4) ; (1,2)(3,4)(5,6) )"

W2_JSON = """{
  "base": {"degree": 4, "symmetric": true},
  "top": {"degree": 8, "generators": ["(1,2)(3,4)(5,6)", "(3,5)(4,6)(7,8)"]}
}"""


@pytest.fixture(scope="module")
def w2():
    return wp.load_context(W2_JSON)


def test_load_context_from_file():
    data_dir = os.environ.get("DATA_DIR")
    if not data_dir:
        pytest.skip("DATA_DIR not set")
    ctx = wp.load_context(os.path.join(data_dir, "w1.json"))
    assert ctx.degree == 8
    assert ctx.base_order == 24
    assert ctx.top_order == 32


def test_element_arithmetic(w2):
    w = w2.element(W_TEXT)
    assert w.order() == 12
    assert (w * w.inverse()) == w2.identity()
    assert w ** 12 == w2.identity()
    assert w ** 6 != w2.identity()
    assert w.territory() == [1, 2, 3, 4, 5, 6, 7]
    assert str(w2.element(str(w))) == str(w)


def test_decomposition(w2):
    cycles = w2.element(W_TEXT).decompose()
    assert [c["territory"] for c in cycles] == [[1, 2], [3, 4], [5, 6], [7]]
    assert [c["yade"] for c in cycles] == ["(1,2)", "(1,2)", "(1,2,3)", "(1,2)"]
    assert [c["anchor"] for c in cycles] == [1, 3, 5, 7]
    assert all(c["element"].is_wreath_cycle() for c in cycles)


def test_conjugacy_round_trip(w2):
    w = w2.element(W_TEXT)
    v = w2.element(V_TEXT)
    assert wp.is_conjugate(w, v)
    a = wp.conjugator(w, v)
    assert a is not None
    assert w.conjugated_by(a) == v


def test_not_conjugate_in_w1():
    data_dir = os.environ.get("DATA_DIR")
    if not data_dir:
        pytest.skip("DATA_DIR not set")
    w1 = wp.load_context(os.path.join(data_dir, "w1.json"))
    w = w1.element(W_TEXT)
    v = w1.element(V_TEXT)
    assert not wp.is_conjugate(w, v)
    assert wp.conjugator(w, v) is None


def test_class_size_and_centraliser(w2):
    w = w2.element(W_TEXT)
    assert w.class_size() == 47_775_744
    assert w.centraliser_order() == 9_216
    desc = wp.centraliser(w)
    assert desc["order"] == 9_216
    assert desc["base_order"] * desc["top_stabiliser_order"] == desc["order"]
    assert all(g * w == w * g for g in desc["generators"])


def test_class_count_small():
    ctx = wp.load_context(
        '{"base": {"degree": 2, "generators": ["(1,2)"]},'
        ' "top": {"degree": 3, "symmetric": true}}'
    )
    assert ctx.class_count() == 10
    reps = ctx.class_representatives()
    assert len(reps) == 10
    assert len({str(r) for r in reps}) == 10
    for i, r in enumerate(reps):
        for s in reps[i + 1 :]:
            assert not wp.is_conjugate(r, s)


def test_errors_are_typed(w2):
    with pytest.raises(wp.WreathError):
        w2.element("( bogus ; nope )")
    with pytest.raises(wp.WreathError):
        wp.load_context('{"base": {"degree": 0}}')
    with pytest.raises(wp.WreathError):
        w2.element(W_TEXT).yade(8)
