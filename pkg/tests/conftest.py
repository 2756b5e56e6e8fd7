import pytest

from resonances import _kernels


@pytest.fixture(params=_kernels.available_backends())
def backend(request):
    """Run the test once per available kernel backend."""
    previous = _kernels.set_backend(request.param)
    yield request.param
    _kernels.set_backend(previous)


def min_distance_pairing(xs, ys):
    """Optimal one-to-one matching of two equal-size point sets; returns the worst pair distance."""
    import numpy as np
    from scipy.optimize import linear_sum_assignment

    cost = np.abs(np.subtract.outer(np.asarray(xs), np.asarray(ys)))
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


ACCEPTANCE_LINES = []


def report(number, ok, detail):
    """Record (and print) one acceptance line; the summary hook repeats them at the end."""
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES.append((number, line))
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
