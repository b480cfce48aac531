from fourierclt.errors import DomainError
from fourierclt.verify import CHECKS, run_verification


def test_all_passing_checks(capsys):
    code = run_verification([("One", lambda: (True, "fine")), ("Two", lambda: (True, "ok"))])
    out = capsys.readouterr().out

    assert code == 0
    assert "One: fine" in out
    assert "All checks passed" in out


def test_failing_check_is_listed(capsys):
    code = run_verification([("Good", lambda: (True, "ok")), ("Bad", lambda: (False, "broken"))])
    out = capsys.readouterr().out

    assert code == 1
    assert "1 check(s) failed" in out
    assert "Failures" in out
    assert "Bad: broken" in out


def test_raising_check_counts_as_failure(capsys):
    def boom():
        raise DomainError("out of range")

    assert run_verification([("Boom", boom)]) == 1
    assert "Boom: out of range" in capsys.readouterr().out


def test_check_names_are_unique():
    names = [name for name, _ in CHECKS]
    assert len(names) == len(set(names))


def test_full_verification_passes(capsys):
    assert run_verification() == 0
    assert "All checks passed" in capsys.readouterr().out
