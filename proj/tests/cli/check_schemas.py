"""Validates every JSON output mode of the CLI against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    exe, schema_dir, data = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    cases = [
        ("invariants", ["invariants", str(data / "c7.edges")]),
        ("power", ["power", "--builtin", "fig1", "-k", "3"]),
        ("power", ["power", str(data / "p4.edges"), "-k", "3"]),
        ("betti", ["betti", "--builtin", "C7", "-k", "2"]),
        ("betti", ["betti", "--ideal", str(data / "mixed.ideal")]),
        ("linrel", ["linrel", "--builtin", "fig1", "-k", "3"]),
        ("linquot", ["linquot", "--builtin", "Htilde", "-k", "2"]),
        ("lambda", ["lambda", "--builtin", "fig2"]),
        ("colon", ["colon", "--builtin", "C7", "-k", "3", "-l", "2"]),
        ("classify", ["classify", "--builtin", "G2example"]),
        ("list-checks", ["list-checks"]),
        ("report", ["verify", "all", "--family", "exhaustive-4"]),
        ("report", ["verify", "ratliff_surprised", "--family", "random-ideals-5", "--seed", "3"]),
    ]
    failures = 0
    for schema_name, args in cases:
        schema = json.loads((schema_dir / f"{schema_name}.schema.json").read_text())
        proc = subprocess.run([exe, "--json", *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        lines = proc.stdout.splitlines() if schema_name == "report" else [proc.stdout]
        for line in lines:
            try:
                jsonschema.validate(json.loads(line), schema)
            except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
                print(f"FAIL {' '.join(args)}: {exc}")
                failures += 1
                break
        else:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
