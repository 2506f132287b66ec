"""
Shared fixtures and configuration for the rigidcover test suite.

Expensive objects (complexes, windows, assembled systems) are session
scoped: they are immutable, so tests can share them freely.
"""

from pathlib import Path

import pytest

from rigidcover.complex import build_oriented_complex
from rigidcover.cover import build_window_s
from rigidcover.models import AssemblyMode
from rigidcover.system import assemble, reduce_tangency
from tests.fixtures.polytopes import (
    boosted_corner_polytope,
    corner_colouring,
    corner_polytope,
    corner_state,
    independent_rule,
    octahedron,
    octahedron_colouring,
    octahedron_state,
    paired_colouring,
    paired_fixture_rule,
    paired_state,
)

FIXTURES_DIR = Path(__file__).parent / 'fixtures'
PROJECT_ROOT = Path(__file__).parent.parent


def render_config(path: Path, **values: str) -> str:
    """
    Write the sample configuration with placeholders filled in.

    Args:
        path: Destination file
        **values: Placeholder values (report, log_file)

    Returns:
        str: Path to the written configuration file
    """
    template = (FIXTURES_DIR / 'sample_config.ini').read_text(encoding='utf-8')
    path.write_text(template.format(**values), encoding='utf-8')
    return str(path)


@pytest.fixture(scope='session')
def octa():
    return octahedron()


@pytest.fixture(scope='session')
def octa_complex(octa):
    return build_oriented_complex(octa, octahedron_colouring(), octahedron_state(),
                                  independent_rule())


@pytest.fixture(scope='session')
def octa_window(octa_complex):
    return build_window_s(octa_complex, 1)


@pytest.fixture(scope='session')
def octa_system(octa_window, octa):
    return assemble(octa_window, octa, AssemblyMode.SIMPLIFIED)


@pytest.fixture(scope='session')
def octa_generic_system(octa_window, octa):
    return assemble(octa_window, octa, AssemblyMode.GENERIC)


@pytest.fixture(scope='session')
def corner():
    return corner_polytope()


@pytest.fixture(scope='session')
def corner_complex(corner):
    return build_oriented_complex(corner, corner_colouring(), corner_state(), independent_rule())


@pytest.fixture(scope='session')
def corner_system(corner_complex, corner):
    return assemble(build_window_s(corner_complex, 1), corner)


@pytest.fixture(scope='session')
def boosted_corner_system():
    p = boosted_corner_polytope()
    cx = build_oriented_complex(p, corner_colouring(), corner_state(), independent_rule())
    return assemble(build_window_s(cx, 1), p)


@pytest.fixture(scope='session')
def paired_complex(octa):
    return build_oriented_complex(octa, paired_colouring(), paired_state(), paired_fixture_rule())


@pytest.fixture(scope='session')
def paired_window(paired_complex):
    return build_window_s(paired_complex, 1)


@pytest.fixture(scope='session')
def paired_system(paired_window, octa):
    return reduce_tangency(assemble(paired_window, octa))
