import pytest

from clustercomplexes.colored import build_complex, positive_part
from clustercomplexes.roots import build_root_system

ACCEPTANCE_MATRIX = [(label, m) for label in ("A2", "A3", "B2", "B3", "G2")
                     for m in (1, 2, 3)]


@pytest.fixture(scope="session")
def complexes():
    """Session cache: (label, m) -> (system, complex, compatibility graph)."""
    cache = {}

    def get(label, m):
        key = (label, m)
        if key not in cache:
            rs = build_root_system(label)
            cx, graph = build_complex(rs, m)
            cache[key] = (rs, cx, graph)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def positive_complexes(complexes):
    cache = {}

    def get(label, m):
        key = (label, m)
        if key not in cache:
            _, cx, _ = complexes(label, m)
            cache[key] = positive_part(cx)
        return cache[key]

    return get
