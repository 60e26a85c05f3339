import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).parents[1] / "scripts"


def run(*argv):
    return subprocess.run([sys.executable, *map(str, argv)], capture_output=True, text=True, check=True).stdout


def test_lattice_sizes_a2():
    out = run(SCRIPTS / "lattice_sizes.py", "--quivers", "a2", "--fields", "2")
    assert out.splitlines()[1].split()[:6] == ["a2", "2", "8", "6", "6", "10"]


def test_figure_script_writes_dot(tmp_path):
    run(SCRIPTS / "reproduce_lattice_figure.py", "--out", tmp_path)
    assert (tmp_path / "lattice.dot").read_text().count("->") == 10
    assert (tmp_path / "idempotent.dot").exists()
