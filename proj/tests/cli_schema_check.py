"""Runs celab subcommands and validates their output against the shipped schema."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

celab, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

tmp = Path(tempfile.mkdtemp())
runs = [
    ["einstein", "--n1", "1", "--n2", "1", "--a", "0", "--b", "1"],
    ["einstein", "--n1", "2", "--n2", "2"],
    ["einstein", "--n1", "3", "--n2", "1", "--a", "1", "--b", "1"],
    ["flow", "--n1", "2", "--n2", "2", "--g1", "0.4", "--g2", "0.4", "--h0", "2.56"],
    ["flow", "--n1", "2", "--n2", "2", "--g1", "1", "--g2", "1", "--h0", "1", "--tmax", "30",
     "--out", str(tmp / "traj.csv")],
    ["flow", "--variant", "unnormalized", "--tmax", "0.5"],
    ["obstructions", "--n1", "2", "--n2", "1", "--a", "1", "--b", "2", "--xi1", "0.5", "--xi2", "-2"],
    ["balanced", "--rank", "3", "--painted", "1,2,3"],
    ["balanced", "--rank", "4", "--painted", "1,2,4", "--c", "5,5,5"],
    ["balanced", "--rank", "2", "--painted", "1,2", "--check-only", "--weights", "1,2,3", "--center", "1"],
]

failures = 0
for args in runs:
    proc = subprocess.run([celab, *args], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != 0:
        print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    doc = json.loads(proc.stdout)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    if errors:
        print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
        failures += 1
    else:
        print(f"ok   {label}")

# the schema must reject documents that break its contract
bad = json.loads(subprocess.run([celab, "einstein"], capture_output=True, text=True).stdout)
bad["schema"] = "chern-einstein-lab/0"
if validator.is_valid(bad):
    print("FAIL schema accepts a wrong version tag")
    failures += 1
bad = json.loads(subprocess.run([celab, "balanced", "--rank", "3", "--painted", "1,2,3"], capture_output=True,
                                text=True).stdout)
del bad["lattice"]
if validator.is_valid(bad):
    print("FAIL schema accepts a construction without a lattice certificate")
    failures += 1

header = (tmp / "traj.csv").read_text().splitlines()[0]
if header != "t,g1,g2,h0,s_n1,s_n2,s_t,residual":
    print(f"FAIL csv header: {header}")
    failures += 1

sys.exit(1 if failures else 0)
