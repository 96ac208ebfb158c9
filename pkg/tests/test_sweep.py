import pytest

from mtlab.errors import HypothesisNotMet, OracleDisagreement, SizeGuardExceeded
from mtlab.sweep import (
    FAIL,
    PASS,
    SUITES,
    VACUOUS,
    Verdict,
    guarded,
    iff,
    implies,
    suite_properties,
    sweep,
)


def test_verdict_helpers():
    assert implies(False, False).status == VACUOUS
    assert implies(True, True).status == PASS
    assert implies(True, False).status == FAIL
    assert iff(True, False, "x").status == FAIL
    assert iff(False, False).status == PASS


def test_guarded_classifies_errors():
    def raises(exc):
        def fn(_):
            raise exc

        return fn

    assert guarded(raises(HypothesisNotMet("premise")), None).status == VACUOUS
    assert guarded(raises(SizeGuardExceeded("too big")), None).status == VACUOUS
    bad = guarded(raises(OracleDisagreement("mismatch", witness="{0}")), None)
    assert bad.status == FAIL and "{0}" in bad.witness
    assert guarded(lambda _: Verdict(PASS), None).status == PASS


@pytest.mark.parametrize("suite", SUITES)
def test_suites_have_properties(suite):
    assert suite_properties(suite)


@pytest.mark.parametrize("suite,size", [("full", 2), ("ess_surj", 4), ("stone", 2), ("oracle", 3)])
def test_accounting(suite, size):
    rep = sweep(suite, size)
    assert rep.accounting_holds()
    assert rep.total_failures == 0


def test_parallel_matches_serial():
    a = sweep("separation", 5, seed=4, count=8, jobs=1)
    b = sweep("separation", 5, seed=4, count=8, jobs=2)
    assert a.to_json() == b.to_json()


def test_report_text_lists_every_property():
    rep = sweep("kp", 2)
    text = rep.text()
    assert all(name in text for name in rep.rows)
