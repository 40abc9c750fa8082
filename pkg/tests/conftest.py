# tests/conftest.py
import io
import os
import sys

import pytest

# Add the project root to the Python path
project_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_dir not in sys.path:
    sys.path.insert(0, project_dir)

from paley_zn.app import PaleyApp
from paley_zn.graph import build_graph
from paley_zn.residues import PrimePowerModulus


@pytest.fixture(scope="session")
def g5():
    return build_graph(5)


@pytest.fixture(scope="session")
def g13():
    return build_graph(13)


@pytest.fixture(scope="session")
def g25():
    return build_graph(25)


@pytest.fixture(params=[(5, 1), (13, 1), (17, 1), (5, 2), (13, 2)], ids=lambda pa: f"{pa[0]}^{pa[1]}")
def prime_power(request):
    return PrimePowerModulus(*request.param)


@pytest.fixture
def run_cli():
    """Run the command line in-process; returns (exit code, stdout, stderr)."""
    def run(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = PaleyApp(stdout=out, stderr=err).run([str(a) for a in argv])
        return code, out.getvalue(), err.getvalue()
    return run
