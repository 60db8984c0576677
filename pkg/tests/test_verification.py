import pytest

from wienerlab import UsageError, verification
from wienerlab.verification import Counterexample, LEMMAS, triple_broom_specs, verify


@pytest.mark.parametrize("lemma", ["ecc", "even", "balance"])
def test_structural_lemmas(lemma):
    rep = verify(lemma, max_n=9)
    assert rep.ok and rep.checked > 0


def test_delta_leaf():
    rep = verify("delta-leaf", samples=500)
    assert rep.ok and rep.checked == 500


def test_delta_broom_small():
    rep = verify("delta-broom", samples=100, triple_min_n=12, triple_max_n=16)
    assert rep.ok
    # each triple broom has at least one context, counted in both orientations
    assert rep.checked >= 2 * sum(1 for _ in triple_broom_specs(12, 16))


def test_balanced_double_and_monotone():
    assert verify("balanced-double", max_n=30).ok
    rep = verify("monotone", ns=1636)
    assert rep.ok and rep.checked == 2 * 109


def test_jobs_give_identical_reports():
    a = verify("delta-leaf", samples=200, seed=3, jobs=1)
    b = verify("delta-leaf", samples=200, seed=3, jobs=2)
    assert (a.checked, a.counterexamples) == (b.checked, b.counterexamples)


def test_counterexamples_are_reported(monkeypatch):
    monkeypatch.setattr(verification, "predicted_leaf_delta", lambda lp: 10**9)
    rep = verify("delta-leaf", samples=5)
    assert not rep.ok and len(rep.counterexamples) == 5
    assert "counterexample" in rep.summary()


def test_unknown_lemma():
    with pytest.raises(UsageError):
        verify("nonsense")


def test_csv_row():
    row = Counterexample("a, b", "3\n0 1\n1 2\n").csv_row("even")
    assert row == "even,a  b,3;0 1;1 2"


def test_triple_broom_specs_cover_all():
    specs = list(triple_broom_specs(12, 12))
    assert all(s.n == 12 and s.diameter >= 5 for s in specs)
    # g leaves over three nonempty bunches for g = 3..7
    assert len(specs) == sum((g - 1) * (g - 2) // 2 for g in range(3, 8))


def test_registry():
    assert set(LEMMAS) == {"ecc", "even", "balance", "delta-leaf", "delta-broom", "balanced-double", "monotone"}
