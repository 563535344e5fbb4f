import pytest

from fd2p.algebra import AlgebraContext
from fd2p.identities import all_identities, failures


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("n", [1, 2])
def test_all_identity_suites_hold(p, n):
    suites = all_identities(AlgebraContext.create(p, n))
    l = (p - 1) // 2
    assert len(suites["products"]) == 2 * l * l + 2 * l
    assert len(suites["change_of_basis"]) == 2 * (p - 1)
    assert len(suites["d_block"]) == 2 * l
    for name, ids in suites.items():
        assert failures(ids) == [], name


def test_failures_reports_labels(ctx3):
    assert failures([("bad", ctx3.a, ctx3.b), ("good", ctx3.a, ctx3.a)]) == ["bad"]
