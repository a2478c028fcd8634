import importlib.util
from pathlib import Path

from muxdeg.datasets import montagna_dir

SCRIPT = Path(__file__).resolve().parents[1] / "scripts" / "build_montagna_fixture.py"


def test_builder_reproduces_bundled_files(tmp_path):
    spec = importlib.util.spec_from_file_location("build_montagna_fixture", SCRIPT)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    mod.main(tmp_path)
    for name in ("meetings.csv", "phone_calls.csv", "roles.csv"):
        assert (tmp_path / name).read_bytes() == (montagna_dir() / name).read_bytes(), name
