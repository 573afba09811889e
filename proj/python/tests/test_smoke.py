import pytest

import contentlab


def test_content_of_y_squared():
    assert contentlab.content("trunc(Z/2,4)", "quad(x^3)", "y*y") == "(x^3)"


def test_analyze_truncated():
    r = contentlab.analyze("Z/4", "trunc(2)")
    assert r["schema"] == "contentlab.report/1"
    assert r["verdicts"]["mccoy"] is False
    assert r["witnesses"]["mccoy"] == "f=x, g=x"
    assert r["consistent"] is True
    assert "timings" not in r


def test_example1():
    r = contentlab.verify_example1(4)
    assert r["passed"] is True
    assert r["content_y2"] == "(x^3)"


def test_small_suite():
    s = contentlab.verify_theorems(moduli=[2, 3], depths=[2], composites=False)
    assert s["violations"] == []
    assert s["instances"] > 0


def test_errors():
    with pytest.raises(ValueError):
        contentlab.ring_size("trunc(Z/0,2)")
    status, out, err = contentlab.run(["content", "--base", "Z/0", "--alg", "id", "--elem", "1"])
    assert status == 2 and "invalid-modulus" in err
