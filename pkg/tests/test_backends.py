import os
import subprocess
import sys

import pytest

SCRIPT = r"""
import sys
from braidkit import _backend
from braidkit.suites import RunConfig, run_suite
assert _backend.BACKEND == sys.argv[1], _backend.BACKEND
print(run_suite(RunConfig(symmetry=sys.argv[2], a="1", b="0", suite="core")).canonical())
"""


def _run(backend, symmetry):
    env = dict(os.environ, BRAIDKIT_BACKEND=backend)
    res = subprocess.run([sys.executable, "-c", SCRIPT, backend, symmetry], env=env, capture_output=True,
                         text=True, check=True)
    return res.stdout


@pytest.mark.parametrize("symmetry", ["standard", "jordan"])
def test_backends_give_identical_reports(symmetry):
    assert _run("flint", symmetry) == _run("python", symmetry)


def test_unknown_backend_rejected():
    env = dict(os.environ, BRAIDKIT_BACKEND="nosuch")
    res = subprocess.run([sys.executable, "-c", "import braidkit.scalars"], env=env, capture_output=True, text=True)
    assert res.returncode != 0
