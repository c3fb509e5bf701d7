import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from centralizer.arith import GF, QQ, ZZ
from centralizer.jordan import JordanType, partitions

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

RINGS = {"Q": QQ, "Z": ZZ, "GF2": GF(2), "GF3": GF(3), "GF7": GF(7), "GF11": GF(11)}

_CRITERIA = pytest.StashKey[dict]()


@st.composite
def jordan_types(draw, rings=(QQ,), max_n=8, max_groups=3):
    ring = draw(st.sampled_from(rings))
    n = draw(st.integers(1, max_n))
    t = draw(st.integers(1, min(max_groups, n, ring.p or n)))
    cuts = sorted(draw(st.lists(st.integers(1, n - 1), min_size=t - 1, max_size=t - 1,
                                unique=True))) if n > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    pool = range(ring.p) if ring.p else range(-4, 5)
    eigs = draw(st.lists(st.sampled_from(list(pool)), min_size=len(sizes),
                         max_size=len(sizes), unique=True))
    groups = []
    for eig, size in zip(eigs, sizes):
        part = draw(st.sampled_from(list(partitions(size))))
        groups.append((eig, list(part)))
    return JordanType(ring, groups)


@pytest.fixture
def record_criterion(request):
    store = request.config.stash.setdefault(_CRITERIA, {})

    def record(number: int, title: str, passed: bool, detail: str = ""):
        store[number] = (title, passed, detail)
        print(f"{'PASS' if passed else 'FAIL'}  criterion {number}: {title}  [{detail}]")
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = config.stash.get(_CRITERIA, None)
    if not store:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(store):
        title, passed, detail = store[number]
        terminalreporter.write_line(
            f"{'PASS' if passed else 'FAIL'}  criterion {number:>2}: {title}  [{detail}]")
