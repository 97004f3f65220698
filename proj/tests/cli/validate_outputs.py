"""Runs every rotvac subcommand and validates each payload against the schema."""
import json
import subprocess
import sys

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

cases = [
    (["cf-em", "--omega", "1", "--radius", "0.5", "--tau1", "0", "--tau2", "1"], 0),
    (["cf-em", "--component", "E1E2", "--tau2", "0.7", "--oracle"], 0),
    (["cf-em", "--spectrum", "discrete", "--tau2", "0.25"], 0),
    (["cf-em", "--coincident", "--tau2", "1"], 0),
    (["cf-em", "--tau1", "1", "--tau2", "1"], 2),
    (["cf-em", "--component", "E1H2"], 2),
    (["cf-scalar", "--omega", "1", "--radius", "0.5", "--tau1", "0", "--tau2", "1"], 0),
    (["cf-scalar", "--spectrum", "discrete", "--tau2", "1.3603"], 0),
    (["--units", "si", "cf-scalar", "--omega", "1e9", "--radius", "0.01", "--tau2", "1e-9"], 0),
    (["spectrum", "--omega", "2", "--n-max", "5", "--phase", "1.0", "--oracle"], 0),
    (["energy-density", "--omega", "0", "--radius", "1"], 0),
    (["energy-density", "--omega", "1", "--radius", "2"], 2),
    (["bogolubov"], 0),
    (["--units", "si", "bogolubov", "--omega", "1", "--radius", "1"], 0),
    (["frames", "--event", "1", "0", "0", "0", "--t-frame", "0.5"], 0),
    (["verify", "--suite", "1,5", "--tolerance-profile", "quick"], 0),
    (["mc", "--n-max", "4", "--n-theta", "4", "--n-phi", "8", "--ensembles", "50"], 0),
]

failures = 0
for args, expected in cases:
    proc = subprocess.run([binary] + args, capture_output=True, text=True)
    if proc.returncode != expected:
        print(f"FAIL exit {proc.returncode} != {expected}: {' '.join(args)}\n{proc.stderr}")
        failures += 1
        continue
    try:
        validator.validate(json.loads(proc.stdout))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        print(f"FAIL schema: {' '.join(args)}\n{e}")
        failures += 1
        continue
    print(f"ok   {' '.join(args)}")

usage = subprocess.run([binary, "cf-em", "--no-such-flag"], capture_output=True, text=True)
if usage.returncode != 64:
    print(f"FAIL usage exit {usage.returncode}")
    failures += 1

sys.exit(1 if failures else 0)
