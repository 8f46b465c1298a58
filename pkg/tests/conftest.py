import pytest

from vankampen import complex as cx

_CRITERIA: dict[str, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, text): acceptance criterion covered by this test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    cid, text = marker
    _CRITERIA.setdefault(cid, (text, []))[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_CRITERIA, key=lambda s: int(s.lstrip("AC"))):
        text, outcomes = _CRITERIA[cid]
        ok = outcomes and all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid}  {text}  ({len(outcomes)} checks)")


@pytest.fixture(scope="session")
def k5():
    return cx.complete_graph(5)


@pytest.fixture(scope="session")
def k33():
    return cx.complete_bipartite(3, 3)


@pytest.fixture(scope="session")
def sigma4():
    return cx.simplex(4)
