import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[str, str] = {}
_members: dict[str, list[str]] = {}
_outcomes: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, label): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is None:
            continue
        num, label = mark.args
        _criteria.setdefault(num, label)
        _members.setdefault(num, []).append(item.nodeid)


def pytest_runtest_logreport(report):
    if report.nodeid not in _outcomes or report.failed:
        if report.when == "call" or report.failed or report.skipped:
            _outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_criteria, key=lambda n: int(n)):
        ids = _members[num]
        bad = [i.split("::")[-1].split("[")[0] for i in ids if _outcomes.get(i) != "passed"]
        status = "FAIL" if bad else "PASS"
        names = ", ".join(f"{n} x{bad.count(n)}" for n in dict.fromkeys(bad))
        tail = f"  [{len(bad)}/{len(ids)} not passing: {names}]" if bad else ""
        tr.write_line(f"criterion {num}: {status}  {_criteria[num]}{tail}")
