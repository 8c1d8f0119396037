from ntasep.golden import conjecture_report, load, run_all


def test_worked_examples():
    for rep in run_all():
        assert rep.ok, rep.as_dict()


def test_conjecture_report_matches_frozen_copy():
    assert conjecture_report() == load("conjecture_report.json")
