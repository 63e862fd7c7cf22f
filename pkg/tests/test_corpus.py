import dataclasses
import io

import pytest

from bridgekit.corpus import (
    FOUR_BRIDGE,
    TWO_BRIDGE,
    CorpusEntry,
    FormatError,
    ValidationError,
    bridge_index_lists,
    load_corpus,
    montesinos_table,
    stated_index,
    verify_all,
    verify_entry,
    verify_two_bridge_route,
)
from bridgekit.dt import parse_dt

from conftest import K11A1

SAMPLE = f"""\
# two records
11a1 : 3 | {K11A1} | {K11A1}

11a367 : 2 | 4 12 14 16 18 20 22 2 6 8 10 | 20 18 16 14 12 -30 -28 -26 -24 -22 40 38 36 34 32 -10 -8 -6 -4 -2
"""


def test_load_sample():
    entries = load_corpus(io.StringIO(SAMPLE))
    assert [e.name for e in entries] == ["11a1", "11a367"]
    assert entries[1].bridge_index == 2
    assert entries[1].bridge_code.n == 20
    assert load_corpus([entries[0].to_line()]) == [entries[0]]


@pytest.mark.parametrize("line, reason", [
    ("11a1 3 | 4 6 2 | 4 6 2", "NAME : B"),
    ("11a1 : x | 4 6 2 | 4 6 2", "bad bridge index"),
    ("11a1 : 5 | 4 6 2 | 4 6 2", "not in 2..4"),
    ("11a1 : 3 | 4 6 2", "two DT codes"),
    ("11a1 : 3 4 6 2", "missing"),
])
def test_format_errors(line, reason):
    with pytest.raises(FormatError, match=reason) as info:
        load_corpus(["# header", line])
    assert info.value.line_no == 2


def test_validation_errors():
    with pytest.raises(ValidationError) as info:
        load_corpus(["11a1 : 3 | 4 8 | 4 8"])
    assert info.value.name == "11a1"
    with pytest.raises(ValidationError, match="expected 11"):
        load_corpus(["11a1 : 3 | 4 6 2 | 4 6 2"])


def test_shipped_names(corpus):
    names = [e.name for e in corpus]
    expected = [f"11a{i}" for i in range(1, 368)] + [f"11n{i}" for i in range(1, 186)]
    assert names == expected


def test_shipped_index_totals(corpus):
    counts = {b: sum(1 for e in corpus if e.bridge_index == b) for b in (2, 3, 4)}
    assert counts == {2: 91, 3: 446, 4: 15}


def test_lists_agree_with_records(corpus):
    two, four = bridge_index_lists()
    assert (two, four) == (TWO_BRIDGE, FOUR_BRIDGE)
    for e in corpus:
        assert e.bridge_index == stated_index(e.name)
    assert set(montesinos_table()) == set(FOUR_BRIDGE)


def test_bridges_level_11a367(corpus_by_name):
    rep = verify_entry(corpus_by_name["11a367"], "bridges")
    assert rep.bridge_count == 2 and rep.bridge_count_matches
    assert rep.realizable is None and rep.passed


def test_full_level(corpus_by_name):
    rep = verify_entry(corpus_by_name["11a1"], "full")
    assert rep.realizable and rep.alexander_matches and rep.passed


def test_structural_level(corpus_by_name):
    rep = verify_entry(corpus_by_name["11n1"], "structural")
    assert rep.codes_valid and rep.bridge_count is None


def test_unknown_level(corpus_by_name):
    with pytest.raises(ValueError):
        verify_entry(corpus_by_name["11a1"], "deep")


def test_tampered_index_fails(corpus_by_name):
    bad = dataclasses.replace(corpus_by_name["11a1"], bridge_index=5)
    rep = verify_entry(bad, "bridges")
    assert rep.bridge_count_matches is False
    assert "bridge_count_matches" in rep.failures()


def test_tampered_code_is_caught():
    # a hand-built entry whose code fails validation is skipped, not crashed
    good = parse_dt("4 6 2")
    forged = CorpusEntry("x", 2, good, dataclasses.replace(good))
    object.__setattr__(forged.bridge_code, "values", (4, 4, 2))
    rep = verify_entry(forged, "full")
    assert rep.codes_valid is False and not rep.passed


def test_nonrealizable_code_is_reported():
    entry = CorpusEntry("x", 3, parse_dt(K11A1), parse_dt("4 6 8 10 2"))
    rep = verify_entry(entry, "full")
    assert rep.realizable is False and rep.skipped and not rep.passed


def test_empty_report():
    rep = verify_all([], "full")
    assert rep.counts() == {"total": 0, "passed": 0, "failed": 0, "errored": 0}
    assert rep.ok


def test_jobs_preserve_order(corpus):
    subset = corpus[:40]
    serial = verify_all(subset, "bridges")
    parallel = verify_all(subset, "bridges", jobs=2)
    assert [e.name for e in parallel.entries] == [e.name for e in subset]
    assert serial.as_dict() == parallel.as_dict()


def test_known_bad_record(corpus_by_name):
    # 11a212's shipped bridge code duplicates 11a211's
    a, b = corpus_by_name["11a211"], corpus_by_name["11a212"]
    assert a.bridge_code == b.bridge_code
    rep = verify_entry(b, "full")
    assert rep.bridge_count == 2 and rep.bridge_count_matches is False
    assert rep.alexander_matches is False


def test_two_bridge_route(corpus_by_name):
    check = verify_two_bridge_route(corpus_by_name["11a367"])
    assert check.passed
    assert check.bridge_fraction[0] == check.knot_fraction[0] == 11
