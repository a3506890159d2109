"""Validate hecke JSON output against schemas/hecke.schema.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema

LIVE = [
    ("specht", ["gram", "--lambda", "3,2", "--with-action"]),
    ("specialized_gram", ["gram", "--lambda", "2,2", "--c", "1/4"]),
    ("hermitian", ["gram", "--lambda", "3,1,1", "--c", "-2/7", "--hermitian"]),
    ("element", ["element", "--lambda", "3,2", "--which", "x"]),
    ("element", ["element", "--lambda", "2,2", "--which", "sigma-m"]),
    ("verdict", ["unitary", "--lambda", "4,1", "--c", "2/5"]),
    ("verdict", ["unitary", "--lambda", "3", "--c", "1/3"]),
    ("jantzen", ["jantzen", "--lambda", "2,2", "--c", "1/4"]),
    ("det", ["det", "--lambda", "4,2"]),
    ("scan", ["locus", "--lambda", "4,1", "--bound", "7"]),
    ("summary", ["verify", "--n-max", "5", "--bound", "6"]),
]

GOLDEN_KIND = {
    "gram_": "specht",
    "hermitian_": "hermitian",
    "element_": "element",
    "unitary_": "verdict",
    "jantzen_": "jantzen",
    "det_": "det",
    "locus_": "scan",
    "verify_": "summary",
}


def validator(schema, name):
    sub = {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]}
    return jsonschema.Draft202012Validator(sub)


def main():
    hecke, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schema = json.loads((root / "schemas" / "hecke.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    failures = 0
    checked = 0

    def check(name, doc, label):
        nonlocal failures, checked
        checked += 1
        errors = list(validator(schema, name).iter_errors(doc))
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0].message}")

    for name, args in LIVE:
        proc = subprocess.run([hecke, *args], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            failures += 1
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            continue
        check(name, json.loads(proc.stdout), " ".join(args))

    for path in sorted((root / "testdata" / "golden").glob("*.json")):
        name = next(v for k, v in GOLDEN_KIND.items() if path.name.startswith(k))
        if name == "specht" and "_c" in path.stem:
            name = "specialized_gram"
        check(name, json.loads(path.read_text()), path.name)

    for path in sorted((root / "testdata" / "gram").rglob("*.json")):
        check("specht", json.loads(path.read_text()), str(path.relative_to(root)))

    print(f"{checked - failures}/{checked} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
