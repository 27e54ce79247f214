import pytest

from liedim import verify


def test_check_family_record():
    fam = verify.CheckFamily("demo")
    fam.record(True, "(a)")
    fam.record(False, "(b)")
    fam.record(False, "(c)")
    assert fam.checks == 3
    assert fam.failures == ["(b)", "(c)"]
    assert verify.failure_count([fam]) == 2


def test_conv_chain():
    assert verify.conv_chain(2, 3) == [
        (0, 3),
        (1, 6),
        (2, 12),
        (3, 24),
        (4, 48),
        (5, 96),
        (6, 192),
        (7, 384),
        (8, 768),
        (9, 1536),
        (10, 3072),
    ]
    assert verify.conv_chain(3, 5)[-1] == (6, 3645)


def test_witt_suite_green():
    fams = verify.run_suites("witt")
    names = [fam.name for fam in fams]
    assert names == ["witt/two-sided-bounds", "witt/one-letter-alphabet"]
    assert [fam.checks for fam in fams] == [640, 100]
    assert verify.failure_count(fams) == 0


def test_suite_dispatch_rejects_unknown():
    with pytest.raises(ValueError):
        verify.run_suites("everything")


def test_all_suite_contains_every_family():
    # structural check only; the heavy grids run in the acceptance tests
    assert set(verify.SUITE_NAMES) == {"all", "witt", "b", "c", "oracle"}
