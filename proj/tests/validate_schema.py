"""Runs a few CLI commands and validates their JSON against docs/report.schema.json."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

commands = [
    ["box", "--mu", "2,1"],
    ["paths", "--mu", "2,1", "--nu", "1,0"],
    ["factorize", "--mu", "2,1", "--power", "3"],
    ["factorize", "--mu", "1,0", "--power", "1"],
    ["dims", "--mu", "1", "--m", "3"],
    ["kernel", "--mu", "1", "--m", "3", "--degree", "2"],
    ["verify", "theorem", "--mu", "1", "--m", "3", "--power", "2", "--degree", "4"],
    ["verify", "box", "--rank", "2", "--max-entry", "2"],
    ["verify", "corollary", "--m", "3"],
]
for args in commands:
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
    jsonschema.validate(json.loads(proc.stdout), schema)
    print("ok", " ".join(args))
