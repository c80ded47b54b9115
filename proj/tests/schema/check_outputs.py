#!/usr/bin/env python3
"""Run every fqk subcommand with --json and validate against the schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

HERE = pathlib.Path(__file__).resolve().parent

COMMANDS = [
    ["fuse", "FO(3)", "u1", "u1"],
    ["fuse", "FO(3)*Z", "0:u2.1:z^1", "1:z^-1.0:u2"],
    ["fuse", "FU(2)", "u", "ubar"],
    ["conj", "FO(3)*Z", "0:u1.1:z^2"],
    ["dim", "FO(3)", "u2"],
    ["dim", "FO(3)", "u100"],
    ["irr", "FO(2)*Z", "--max-len", "2"],
    ["cosets", "FO(3)", "--subgroup", "fo-even", "--depth", "4"],
    ["cosets", "FO(3)*Z", "--subgroup", "fu-in-foz", "--depth", "2", "--side", "right"],
    ["divisible", "FO(3)*Z", "--subgroup", "fu-in-foz", "--depth", "2"],
    ["divisible", "FO(3)", "--subgroup", "fo-even"],
    ["tree", "Z*Z", "--depth", "2"],
    ["ktree", "FO(3)*Z", "--depth", "3"],
    ["kpv", "FU(2)*FU(3)*FO(4)"],
    ["kpv", "FU(2)", "--module", str(HERE / "fu2_swap_module.json")],
    ["rescheck", "FU(2)*FO(3)", "--degree", "3"],
]


def main() -> int:
    fqk, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    output_schema = json.loads((schema_dir / "fqk-output.schema.json").read_text())
    module_schema = json.loads((schema_dir / "coefficient-module.schema.json").read_text())
    out_v = jsonschema.Draft202012Validator(output_schema)
    mod_v = jsonschema.Draft202012Validator(module_schema)
    jsonschema.Draft202012Validator.check_schema(output_schema)
    jsonschema.Draft202012Validator.check_schema(module_schema)

    failures = 0
    for module in HERE.glob("*_module.json"):
        for err in mod_v.iter_errors(json.loads(module.read_text())):
            print(f"FAIL {module.name}: {err.message}")
            failures += 1

    for args in COMMANDS:
        proc = subprocess.run([fqk, "--json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = list(out_v.iter_errors(doc))
        if doc.get("command") != args[0]:
            errors.append(jsonschema.ValidationError("command field mismatch"))
        for err in errors:
            print(f"FAIL {label}: {err.message}")
        failures += len(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
