import pytest

from collatzkit import verify


def strip_elapsed(report):
    return (report.check_name, report.range_desc, report.pass_count, report.failures)


def test_unknown_check():
    with pytest.raises(KeyError):
        verify.run_check("no-such-suite")


def test_check_names_cover_spec_surfaces():
    names = verify.check_names()
    for required in ("table1", "rr-steering", "partition", "convergence"):
        assert required in names


def test_convergence_small():
    report = verify.run_check("convergence", max_value=2001)
    assert report.passed
    assert report.pass_count == 1001  # odd numbers in [1, 2001]


def test_workers_change_elapsed_only():
    serial = verify.run_check("partition", max_value=4001, workers=1)
    parallel = verify.run_check("partition", max_value=4001, workers=2)
    assert strip_elapsed(serial) == strip_elapsed(parallel)
    assert serial.passed


def test_table1_check():
    report = verify.run_check("table1")
    assert report.passed
    assert report.pass_count == 22


def test_fixed_checks_pass():
    for name in ("worked-examples", "loops", "rr-filter", "jump-interior"):
        report = verify.run_check(name)
        assert report.passed, report.failures


def test_graph_check_small():
    report = verify.run_check("graph", max_value=500)
    assert report.passed, report.failures


def test_reports_have_range_descriptions():
    report = verify.run_check("rr-steering", max_value=10)
    assert "10" in report.range_desc
    assert report.passed
