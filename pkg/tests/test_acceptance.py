"""One test per acceptance criterion; each prints a single [PASS]/[FAIL] line."""
import pytest

from johnsonlab import acceptance

SEED = 7


@pytest.mark.parametrize("name", list(acceptance.CRITERIA))
def test_criterion(name, capsys):
    result = acceptance.run(name, SEED)[0]
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.failures[:5]
