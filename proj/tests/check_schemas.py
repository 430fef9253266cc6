#!/usr/bin/env python3
"""Validate every bundled corpus file against schemas/, plus a few CLI outputs."""
import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = pathlib.Path(__file__).resolve().parent.parent


def registry():
    resources = []
    for path in sorted((ROOT / "schemas").glob("*.schema.json")):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def main():
    reg = registry()
    validators = {}
    for name in ("ring", "module", "group", "sequence", "matrix"):
        schema = json.loads((ROOT / "schemas" / f"{name}.schema.json").read_text())
        validators[name] = Draft202012Validator(schema, registry=reg)

    docs = [(p, json.loads(p.read_text())) for p in sorted((ROOT / "corpus").rglob("*.json"))]
    if len(sys.argv) > 1:
        binary = sys.argv[1]
        with tempfile.TemporaryDirectory() as tmp:
            for args in (["make", "repg", "--group", str(ROOT / "corpus/groups/q8.json")],
                         ["make", "end", "--mrank", "3"],
                         ["make", "extension", "--group", str(ROOT / "corpus/groups/d4.json"), "--normal", "0"]):
                out = subprocess.run([binary] + args, check=True, capture_output=True, text=True).stdout
                docs.append((pathlib.Path(tmp) / " ".join(args[:2]), json.loads(out)))

    failures = 0
    for path, doc in docs:
        errors = list(validators[doc["schema"]].iter_errors(doc))
        for e in errors[:3]:
            print(f"{path}: {e.message}")
        failures += bool(errors)
    print(f"{len(docs) - failures}/{len(docs)} documents conform")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
