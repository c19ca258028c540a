from pathlib import Path

import pytest

opensos = pytest.importorskip("opensos")

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


@pytest.fixture(scope="module")
def spec():
    return opensos.load(CORPUS)


def test_names(spec):
    assert {"Bpa", "Ex3", "Ex3B", "PlusA"} <= set(spec.names)


def test_fh_associativity(spec):
    v = spec.check("PlusA", "fh", "plus(x, plus(y, z))", "plus(plus(x, y), z)")
    assert v["outcome"] == "holds"


def test_ci_witness(spec):
    v = spec.check("ChoiceWithA", "ci", "plus(x, y)", "zero", term_size=2)
    assert v["outcome"] == "fails"
    assert v["witness"]["formula"] == "<a>tt"
    sigma = v["witness"]["substitution"]
    lhs = spec.transitions("ChoiceWithA", "plus(%s, %s)" % (sigma["x"], sigma["y"]))
    assert lhs and not spec.transitions("ChoiceWithA", "zero")


def test_ruloids(spec):
    (r,) = spec.ruloids("Ex3", "f(x)")
    assert r["text"] == "x -a-> h0 |- f(x) -a-> h0"


def test_transitions(spec):
    assert spec.transitions("Bpa", "plus(zero, pre_a(zero))") == [{"label": "a", "target": "zero"}]


def test_advise(spec):
    report = spec.advise("Ex3", "Ex3B", "fh")
    assert report["axioms"][0]["classification"] == "broken"


def test_gsos_check(spec):
    assert spec.gsos_check("Bpa")["ok"]


def test_errors(spec):
    with pytest.raises(opensos.ParseError):
        opensos.parse('tss T { labels: a; op f/1; rule "r": |- g(x) -a-> x; }')
    with pytest.raises(opensos.Error):
        spec.check("Nope", "fh", "x", "x")
    with pytest.raises(ValueError):
        spec.check("PlusA", "weak", "x", "x")
    with pytest.raises(ValueError):
        spec.check("PlusA", "fh", "x", "x", speed=3)


def test_run():
    code, out, _ = opensos.run(["check", "fh", "f(x)", "x", "--tss", "Ex3B", "--spec", str(CORPUS)])
    assert code == 1
    assert "fails" in out
