import re
from collections import OrderedDict

_criteria: "OrderedDict[str, bool]" = OrderedDict()
_NAME = re.compile(r"test_criterion_(\d+)_(\w+?)(?:\[|$)")


def pytest_runtest_logreport(report):
    mt = _NAME.search(report.nodeid)
    if not mt or (report.when != "call" and report.passed):
        return
    key = f"{int(mt.group(1)):2d} {mt.group(2)}"
    _criteria[key] = _criteria.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key, ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}")
