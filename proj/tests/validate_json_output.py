"""Runs each CLI subcommand with --format json and validates the output."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

RUNS = [
    ("table", ["converge", "--fn", "fejer:sigma=2", "--tau", "10,20"]),
    ("table", ["lemma2", "--sigma", "1", "--tau", "10", "--delta", "0.5"]),
    ("table", ["counterexample", "--m", "1..3"]),
    ("table", ["inequalities", "--fn", "fejer:sigma=2"]),
    ("table", ["lewitan", "--fn", "sinc:sigma=1", "--tau", "20", "--x", "0,0.37"]),
    ("approximant", ["coeffs", "--fn", "sinc:sigma=1", "--tau", "10"]),
]


def main():
    exe, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {name: json.loads((schema_dir / f"{name}.schema.json").read_text()) for name in ("table", "approximant")}
    failures = 0
    for name, args in RUNS:
        proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            doc = json.loads(proc.stdout)
            jsonschema.validate(doc, schemas[name])
            if name == "table":
                assert doc["command"] == args[0]
                assert all(len(row) == len(doc["columns"]) for row in doc["rows"])
            else:
                assert len(doc["coefficients"]) == 2 * doc["N"] + 1
            print(f"ok   {args[0]}")
        except Exception as exc:  # noqa: BLE001
            failures += 1
            print(f"FAIL {args[0]}: {exc}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
