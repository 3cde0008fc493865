import pytest

from ratwitt.fixtures import FIXTURES, Report


def test_report_format():
    rep = Report("x")
    rep.check(True, "one")
    rep.check(False, "two")
    assert rep.format().splitlines() == ["pass one", "FAIL two", "x: FAIL"]


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture(name):
    rep = FIXTURES[name]()
    assert rep.name == name
    failing = [text for ok, text in rep.lines if not ok]
    if name == "degree-bounds":
        # the product bound n+m does not hold; the sharper bound does
        assert failing == [t for t in failing if t.startswith("bound(f*g) <= n+m")] and failing
    else:
        assert not failing, failing
