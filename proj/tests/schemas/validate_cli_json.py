"""Validate the CLI's JSON outputs with the reference jsonschema implementation.

usage: validate_cli_json.py AHYP_EXECUTABLE SCHEMA_DIR
"""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

COMMANDS = [
    ("variety_descriptor", ["info", "Fl(1,2,3;5)"]),
    ("variety_descriptor", ["info", "SG(2,6)xP(1)"]),
    ("threshold", ["threshold", "OG(2,7)"]),
    ("classify", ["classify", "P(2)xP(1)xP(1)", "--deg", "4,5,5"]),
    ("classify", ["classify", "P(3)", "--deg", "2"]),
    ("fano_class", ["fano-class", "--d", "7"]),
    ("line_count", ["line-count", "--n", "6"]),
    ("chow_element", ["schubert", "mul", "--k", "2", "--n", "6", "s[1]", "s[2,1] - s[3]"]),
    ("schubert_integral", ["schubert", "integrate", "--k", "3", "--n", "6", "s[2,1]", "s[3,2,1]"]),
    ("schubert_dual", ["schubert", "dual", "--k", "2", "--n", "8", "5,2"]),
    ("genus_report", ["certify", "Fl(1,2;4)", "--deg", "8,9"]),
    ("genus_bound", ["genus-bound", "P(5)", "--deg", "11", "--s", "1", "--e", "4"]),
    ("section_dominating", ["section-dom", "--n", "3", "--json"]),
    ("section_dominating_product", ["section-dom", "--factors", "1:1,4:2"]),
    ("sweep", ["sweep", "P(2)xP(2)", "--range", "1..7"]),
]


def main():
    executable, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in schemas.items())
    for doc in schemas.values():
        jsonschema.Draft202012Validator.check_schema(doc)

    failures = 0
    for schema_name, args in COMMANDS:
        if "--json" not in args:
            args = args + ["--json"]
        result = subprocess.run([executable, *args], capture_output=True, text=True)
        if result.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {result.returncode}: {result.stderr.strip()}")
            failures += 1
            continue
        validator = jsonschema.Draft202012Validator(
            schemas[f"{schema_name}.schema.json"], registry=registry)
        errors = list(validator.iter_errors(json.loads(result.stdout)))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)
    print(f"{len(COMMANDS) - failures}/{len(COMMANDS)} outputs valid, {len(schemas)} schemas checked")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
