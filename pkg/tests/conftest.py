"""Per-criterion PASS/FAIL summary for tests marked ``acceptance(n, title=...)``."""

_outcomes: dict[int, list[bool]] = {}
_titles: dict[int, str] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    # setup errors count as failures; teardown is ignored
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        number = marker.args[0]
        _titles.setdefault(number, marker.kwargs.get("title", ""))
        _outcomes.setdefault(number, []).append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        status = "PASS" if all(_outcomes[number]) else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {_titles[number]}")
