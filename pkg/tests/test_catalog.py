import pytest

from bentkit import catalog


@pytest.mark.parametrize("number", [1, 2, 4, 5])
def test_fast_examples_reproduce(number):
    res = catalog.reproduce(number)
    assert res.ok, res.first_failure()
    js = res.to_json()
    assert js["example"] == number and js["ok"] and js["checks"]


def test_example_1_prediction_is_bent_and_exact():
    res = catalog.reproduce(1)
    assert res.field.startswith("2^6")
    pred = next(c for c in res.checks if c.name.endswith("prediction equals oracle"))
    assert pred.detail["bent"] and pred.detail["predicted_vs_oracle"] == "equal"
    gamma = next(c for c in res.checks if c.name == "coupled index set")
    assert gamma.detail["gamma"] == [2, 3]


def test_example_4_notes_record_printed_values():
    res = catalog.reproduce(4)
    assert any("case (2)" in n for n in res.notes)
    assert any("case (4)" in n for n in res.notes)


def test_unknown_example():
    with pytest.raises(KeyError):
        catalog.reproduce(8)


def test_result_helpers():
    r = catalog.ExampleResult(0, "x")
    r.add("a", True)
    r.add("b", False, why=1)
    assert not r.ok and r.first_failure().name == "b"
    assert r.to_json()["checks"][1] == {"name": "b", "ok": False, "why": 1}
