import pytest

from mbfts import (BasePartition, Universe, build_defuzz_table, fuzzify_series,
                   load_bundled_series, refine_partition)

import published


@pytest.fixture(scope="session")
def series():
    return load_bundled_series()


@pytest.fixture(scope="session")
def partition(series):
    base = BasePartition.build(Universe(900, 1700), published.SUBDIVISION_COUNTS, series)
    return refine_partition(base)


@pytest.fixture(scope="session")
def fuzzified(partition, series):
    return fuzzify_series(partition, series)


@pytest.fixture(scope="session")
def table(partition):
    return build_defuzz_table(partition)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    n = report.user_properties and dict(report.user_properties).get("criterion")
    if n:
        _criteria.setdefault(n, []).append((report.nodeid.split("::")[-1], report.outcome))


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        failed = [name for name, outcome in results if outcome != "passed"]
        status = "FAIL" if failed else "PASS"
        detail = f" (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {n}: {status} [{len(results) - len(failed)}/{len(results)} checks]{detail}")
