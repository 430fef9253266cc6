#!/usr/bin/env python3
"""Regenerate corpus/modules/ from the bundled rings.

Regular modules copy the fusion coefficients; fiber modules act by the
integer FP dimensions reported by `fusionseq fpdim`.
"""
import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def regular(ring_name):
    ring = json.loads((ROOT / "rings" / f"{ring_name}.json").read_text())
    return {"schema": "module", "name": f"{ring_name}_regular", "ring": f"../rings/{ring_name}.json",
            "mrank": ring["rank"], "a": ring["N"], "labels": ring.get("labels", [])}


def fiber(ring_name, binary):
    out = subprocess.run([binary, "fpdim", str(ROOT / "rings" / f"{ring_name}.json")],
                         check=True, capture_output=True, text=True).stdout
    dims = [o["exact_integer"] for o in json.loads(out)["objects"]]
    if None in dims:
        sys.exit(f"{ring_name} has non-integer dimensions")
    return {"schema": "module", "name": f"{ring_name}_vec", "ring": f"../rings/{ring_name}.json",
            "mrank": 1, "a": [[[d]] for d in dims], "labels": ["Vec"]}


def main():
    binary = sys.argv[1] if len(sys.argv) > 1 else "build/fusionseq"
    modules = [regular("fib"), regular("ising"), fiber("reps3", binary), fiber("repq8", binary), fiber("z2", binary)]
    (ROOT / "modules").mkdir(exist_ok=True)
    for m in modules:
        (ROOT / "modules" / f"{m['name']}.json").write_text(json.dumps(m) + "\n")


if __name__ == "__main__":
    main()
