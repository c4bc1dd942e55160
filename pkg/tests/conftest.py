import os
import re
import sys

sys.path.insert(0, os.path.dirname(__file__))

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if m and report.when == "call":
        number = int(m.group(1))
        name = m.group(2).replace("_", " ")
        _results[number] = (name, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        name, passed = _results[number]
        terminalreporter.write_line(
            "ACCEPTANCE %2d %-24s %s" % (number, name, "PASS" if passed else "FAIL")
        )
