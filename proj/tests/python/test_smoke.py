import pytest

import smoothtest


def test_parse_and_inspect():
    ideal = smoothtest.parse_ideal("ring QQ [x,y,z]\nx*y\nz\n")
    assert ideal.variables == ["x", "y", "z"]
    assert ideal.characteristic == 0
    assert ideal.generators == ["x*y", "z"]
    assert ideal.dimension() == 1
    assert ideal.contains("x*y*z + z^2")
    assert not ideal.contains("x")


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        smoothtest.parse_ideal("ring QQ [x]\nx+*\n")


@pytest.mark.parametrize("mode", ["hironaka", "hybrid", "jacobian"])
def test_cusp_is_singular(mode):
    report = smoothtest.check("ring QQ [x,y]\ny^2-x^3\n", mode=mode)
    assert report["verdict"] == "singular"
    assert report["witness"]["depth"] == 0


def test_projective_families():
    assert smoothtest.is_smooth(smoothtest.rational_normal_curve(3), projective=True)
    assert smoothtest.is_smooth(smoothtest.veronese_ci(), projective=True) is False
    changed = smoothtest.coordinate_change(smoothtest.cyclic_polytope(2, 4), seed=5)
    assert smoothtest.is_smooth(changed, projective=True) is False


def test_report_is_deterministic():
    ideal = smoothtest.parse_ideal("ring QQ [a,b,c,d]\na*b-c*d\na^2-b*d+c^2\n")
    a = smoothtest.check(ideal, jobs=1)
    b = smoothtest.check(ideal, jobs=4, seed=0)
    assert a == b
    assert "timing" not in a


def test_prime_field():
    assert smoothtest.is_smooth("ring F7 [x,y]\nx^2+y^2-1\n")


def test_suites():
    names = smoothtest.suite_names()
    assert "table1" in names
    rows = smoothtest.suite("small")
    assert [name for name, _, _ in rows][:2] == ["I1-2", "I1-3"]
    for name, ideal, expected in rows:
        assert expected in ("smooth", "singular")
        assert str(smoothtest.parse_ideal(str(ideal))) == str(ideal)
