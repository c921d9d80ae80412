import time
from fractions import Fraction

import pytest
from pydantic import ValidationError

from hyperlambda.models import CheckKind, LedgerEntry, LedgerStatus, SuiteLevel
from hyperlambda.utils.constructions import complete, known_lambda
from hyperlambda.utils.ledger_utils import (apex_bound_check, asymptotic_disclosure,
                                            envelope_entries, fr_family_check,
                                            golden_value_entries, k43_lemma_check,
                                            motzkin_straus_check, property_entries, run_suite,
                                            structural_entries, summarize)
from hyperlambda.utils.parallel_utils import spawn_generators


def test_golden_values_pass():
    known = [(complete(5, 3), known_lambda("K", (5, 3))),
             (complete(4, 3), known_lambda("K", (4, 3)))]
    entries = golden_value_entries(known)
    assert [e.status for e in entries] == [LedgerStatus.PASS, LedgerStatus.PASS]
    assert entries[0].id == "golden:K:5,3"
    assert entries[0].witness is None
    assert all("closed-form" not in e.detail for e in entries)


def test_tampered_golden_value_fails_with_witness():
    k5 = known_lambda("K", (5, 3))
    tampered = k5.model_copy(update={"value": Fraction(2, 24)})
    entries = golden_value_entries([(complete(5, 3), tampered),
                                    (complete(4, 3), known_lambda("K", (4, 3)))])
    failed = [e for e in entries if e.status is LedgerStatus.FAIL]
    assert len(failed) == 1
    assert failed[0].id == "golden:K:5,3"
    assert failed[0].witness["expected"] == "1/12"
    assert failed[0].witness["computed"] == pytest.approx(0.08)


def test_envelope_entries_pass():
    entries = envelope_entries(SuiteLevel.QUICK)
    assert entries
    assert all(e.status is LedgerStatus.PASS for e in entries), [
        (e.id, e.witness) for e in entries if e.status is not LedgerStatus.PASS]
    ids = [e.id for e in entries]
    assert len(ids) == len(set(ids))


@pytest.mark.parametrize("r", [3, 4, 5])
def test_fr_family_check(r):
    entry = fr_family_check(r)
    assert entry.status is LedgerStatus.PASS
    assert entry.parameters == {"r": r, "members": r - 2}


def test_disclosure_entries_are_skipped():
    entries = asymptotic_disclosure()
    assert len(entries) == 4
    assert all(e.status is LedgerStatus.SKIPPED and e.detail for e in entries)


def test_failed_entry_needs_witness():
    with pytest.raises(ValidationError, match="witness"):
        LedgerEntry(id="x", citation="c", kind=CheckKind.STRUCTURAL, status=LedgerStatus.FAIL)
    entry = LedgerEntry(id="x", citation="c", kind=CheckKind.STRUCTURAL,
                        status=LedgerStatus.FAIL, witness={"graph": "r=3 n=3 {123}"})
    assert entry.model_dump(mode="json")["status"] == "fail"


def test_summarize_counts_every_status():
    entries = asymptotic_disclosure() + [fr_family_check(3)]
    assert summarize(entries) == {"pass": 1, "fail": 0, "skipped": 4}


def test_property_entries_pass():
    entries = property_entries(SuiteLevel.QUICK, seed=1)
    assert all(e.status is LedgerStatus.PASS for e in entries), [
        (e.id, e.witness) for e in entries if e.status is not LedgerStatus.PASS]


@pytest.mark.slow
def test_k43_lemma_check():
    assert k43_lemma_check(max_n=5).status is LedgerStatus.PASS


@pytest.mark.slow
def test_apex_bound_check():
    entry = apex_bound_check(SuiteLevel.QUICK)
    assert entry.status is LedgerStatus.PASS
    assert entry.parameters["applicable"] > 0


@pytest.mark.slow
def test_structural_entries_pass():
    entries = structural_entries(SuiteLevel.QUICK)
    assert all(e.status is LedgerStatus.PASS for e in entries)


@pytest.mark.slow
def test_quick_suite():
    started = time.monotonic()
    entries = run_suite(SuiteLevel.QUICK)
    assert time.monotonic() - started < 120
    counts = summarize(entries)
    assert counts["fail"] == 0
    assert counts["skipped"] == 4
    ids = [e.id for e in entries]
    assert len(ids) == len(set(ids))


def test_golden_value_of_large_complete_graph_is_solved_numerically():
    entries = golden_value_entries([(complete(9, 3), known_lambda("K", (9, 3)))])
    assert entries[0].status is LedgerStatus.PASS
    assert "support-enum" in entries[0].detail or "ascent" in entries[0].detail


def test_motzkin_straus_check_small_sample():
    entry = motzkin_straus_check(spawn_generators(3, 1)[0], count=20, seed=3, max_n=8)
    assert entry.status is LedgerStatus.PASS
    assert entry.parameters == {"graphs": 20, "max_n": 8}


@pytest.mark.slow
def test_motzkin_straus_check_full_sample():
    started = time.monotonic()
    entry = motzkin_straus_check(spawn_generators(0, 1)[0], count=200, seed=0, max_n=12)
    assert time.monotonic() - started < 60
    assert entry.status is LedgerStatus.PASS, entry.witness
