#!/usr/bin/env python3
"""Run each wpn-lab subcommand with --format json and validate against schemas/."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

C6 = "EhEG"
C8 = "GhCGKC"

RUNS = [
    ("wpn", ["wpn", C6], 0),
    ("certify", ["certify", "--theorem", "c6", C6], 0),
    ("certify", ["certify", "--theorem", "c8", "F~~~w"], 0),
    ("sequences", ["sequences", "--graph", C6], 0),
    ("sequences", ["sequences", "--graph", "DUW"], 0),
    ("sequences", ["sequences", "--graph", C8, "--budget", "3"], 3),
    ("verify-claims", ["verify-claims", "--cycle", "12"], 0),
    ("count", ["count", "--fn", "f2", "--n", "12"], 0),
    ("bound", ["bound", "--n", "8", "--l", "4"], 0),
    ("bound", ["bound", "--n", "7", "--l", "4"], 0),
    ("sample-partitions", ["sample-partitions", "--n", "9", "--samples", "5", "--seed", "3"], 0),
    ("sample-partitions", ["sample-partitions", "--n", "9", "--samples", "5", "--seed", "3", "--stats"], 0),
    ("census", ["census", "--n", "6", "--forbid", C6, "--theorem", "c6", "--shards", "4"], 0),
    ("census", ["census", "--n", "7", "--forbid", C8, "--theorem", "c8", "--mode", "unlabeled"], 0),
    ("census", ["census", "--n", "2", "--forbid", C6, "--theorem", "c6"], 0),
    ("girth5", ["girth5", "--n", "6"], 0),
]


def main():
    exe, schema_dir = sys.argv[1], sys.argv[2]
    schemas = {}
    for name in os.listdir(schema_dir):
        if name.endswith(".schema.json"):
            with open(os.path.join(schema_dir, name)) as f:
                schema = json.load(f)
            jsonschema.Draft202012Validator.check_schema(schema)
            schemas[name[: -len(".schema.json")]] = schema

    failures = 0

    def check(label, schema_name, doc):
        nonlocal failures
        try:
            jsonschema.validate(doc, schemas[schema_name])
            print(f"ok    {label}")
        except jsonschema.ValidationError as e:
            failures += 1
            print(f"FAIL  {label}: {e.message}")

    for schema_name, args, want in RUNS:
        proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != want:
            failures += 1
            print(f"FAIL  {label}: exit {proc.returncode}, wanted {want}\n{proc.stderr}")
            continue
        check(label, schema_name, json.loads(proc.stdout))

    with tempfile.TemporaryDirectory() as tmp:
        manifest = os.path.join(tmp, "m.json")
        args = ["census", "--n", "5", "--forbid", C6, "--theorem", "c6", "--shards", "8",
                "--manifest", manifest, "--stop-after", "2"]
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        if proc.returncode != 3:
            failures += 1
            print(f"FAIL  stopped census exited {proc.returncode}")
        else:
            check("census --stop-after", "census", json.loads(proc.stdout))
        with open(manifest) as f:
            check("manifest", "manifest", json.load(f))

    print(f"{failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
