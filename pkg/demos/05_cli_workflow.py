"""Driving the simulator from the command line, end to end.

Everything the library does is reachable without writing Python: a JSON
config describes the run, the CSV output carries the trajectory and any
requested eigenvalue diagnostics, and small query subcommands expose the
algebra.  This script shells out to the installed `cohvec` executable the
way a scripted pipeline would.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

workdir = Path(tempfile.mkdtemp(prefix="cohvec_demo_"))
config = {
    "n": 2,
    "initial": "bell_ab",
    "schedule": [
        {"terms": {"33": 1.0}, "duration": 1.5707963267948966},
        {"terms": {"11": 0.5}, "duration": 1.0},
    ],
    "sample_step": 0.1,
    "outputs": {"components": True, "density_eigenvalues": True, "pt_eigenvalues": ["A"]},
}
cfg_path = workdir / "run.json"
cfg_path.write_text(json.dumps(config, indent=2))
out_path = workdir / "run.csv"

print("config:", cfg_path)
result = subprocess.run(
    [sys.executable, "-m", "cohvec.cli", "simulate", "--config", str(cfg_path),
     "--out", str(out_path)],
    capture_output=True, text=True, check=True,
)
print(result.stdout)

lines = out_path.read_text().splitlines()
print("metadata:", lines[0])
print("columns: ", len(lines[1].split(",")))
print("rows:    ", len(lines) - 2)

for args in (["bracket", "1", "2"],
             ["bracket", "30", "11"],
             ["gate", "cnot", "--n", "2", "--control", "2", "--target", "1"]):
    result = subprocess.run([sys.executable, "-m", "cohvec.cli", *args],
                            capture_output=True, text=True, check=True)
    print(f"\n$ cohvec {' '.join(args)}")
    print(result.stdout, end="")
