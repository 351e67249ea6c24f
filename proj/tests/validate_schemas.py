"""Runs every nodalq command on the fixtures and validates the reports and
file artifacts against the schemas shipped in schemas/.

usage: validate_schemas.py <nodalq> <schemas-dir> <fixtures-dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    return Registry().with_resources(resources)


def validator(registry, schema_dir, name):
    schema = json.loads((schema_dir / name).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema, registry=registry)


def main():
    tool, schema_dir, fixtures = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    registry = load_registry(schema_dir)
    run_report = validator(registry, schema_dir, "run_report.schema.json")
    failures = 0

    def check(label, instance, v):
        nonlocal failures
        errors = sorted(v.iter_errors(instance), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
        else:
            print(f"ok   {label}")

    file_formats = {
        "*.surface.json": "polynomial.schema.json",
        "*.nodes.json": "points.schema.json",
        "*.family.json": "family.schema.json",
        "*.config.json": "config.schema.json",
    }
    for pattern, schema in file_formats.items():
        v = validator(registry, schema_dir, schema)
        for path in sorted(fixtures.glob(pattern)):
            check(path.name, json.loads(path.read_text()), v)

    f = lambda name: str(fixtures / name)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        search = tmp / "search.json"
        search.write_text(json.dumps({"seed_count": 40}))
        check("search.json", json.loads(search.read_text()), validator(registry, schema_dir, "search.schema.json"))
        noncommuting = tmp / "noncommuting.family.json"
        noncommuting.write_text(json.dumps({"dim": 2, "operators": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]]}))
        commands = [
            (["certify", "--surface", f("kummer_012345.surface.json"), "--nodes", f("kummer_012345.nodes.json"), "--workers", "3"], 0),
            (["certify", "--surface", f("fermat.surface.json"), "--nodes", f("one_node.nodes.json")], 0),
            (["find-singular", "--surface", f("one_node.surface.json"), "--search", str(search)], 0),
            (["find-singular", "--surface", f("fermat.surface.json"), "--seed", "3", "--search", str(search)], 0),
            (["severi", "--surface", f("kummer_012345.surface.json"), "--nodes", f("kummer_012345.nodes.json")], 0),
            (["severi", "--nodes", f("seventeen.nodes.json")], 2),
            (["stalk", "--delta", "16"], 0),
            (["stalk", "--family", f("jordan_pair.family.json")], 0),
            (["stalk", "--family", str(noncommuting)], 2),
            (["betti", "--delta", "1"], 0),
            (["lattice", "--delta", "16"], 0),
            (["lattice", "--config", f("nodal16.config.json")], 0),
            (["kummer", "--roots", "0,1,2,3,4,5", "--out", str(tmp / "k")], 0),
            (["kummer", "--roots", "-3,1/2,2,7,11/3,-5"], 0),
        ]
        for args, expected in commands:
            label = " ".join(a if "/" not in a or a.count(",") else pathlib.Path(a).name for a in args)
            proc = subprocess.run([tool] + args, capture_output=True, text=True)
            if proc.returncode != expected:
                failures += 1
                print(f"FAIL {label}: exit {proc.returncode}, expected {expected}\n{proc.stderr}")
                continue
            check(label, json.loads(proc.stdout), run_report)
        for suffix, schema in [("surface", "polynomial"), ("nodes", "points"), ("severi", "severi_report")]:
            path = tmp / f"k.{suffix}.json"
            check(path.name, json.loads(path.read_text()), validator(registry, schema_dir, f"{schema}.schema.json"))

    print(f"{failures} schema failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
