import subprocess

import pytest


@pytest.fixture(scope="session")
def dataset_dir(tmp_path_factory):
    """Real CSVs from the simulator CLI, generated once per test session."""
    out = tmp_path_factory.mktemp("datasets")
    for name in ("swap", "cubitt"):
        result = subprocess.run(
            ["cohvec", "reproduce", name, "--out-dir", str(out)],
            capture_output=True, text=True,
        )
        assert result.returncode == 0, result.stderr
    return out
