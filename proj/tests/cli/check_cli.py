#!/usr/bin/env python3
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMAS = sys.argv[1], sys.argv[2]

SECOND2 = {"kind": "second", "n": 2, "t": 2, "a": [1, 1], "b": 2}
SECOND3 = {"kind": "second", "n": 3, "t": 2, "a": [1, 1, 1], "b": 2}
FIRST3 = {"kind": "first", "n": 3, "t": 2, "a": [1, 1, 1]}
PAIR = json.dumps([SECOND2, SECOND2])
TRIPLE = json.dumps([SECOND3, SECOND3, SECOND3])
CIRCLE = json.dumps({"vars": ["x", "y"], "polys": ["x^2+y^2-1", "x-y"], "var": "y"})

failures = []


def run(args, env=None):
    e = dict(os.environ)
    e.pop("BEZOUT_SEED", None)
    if env:
        e.update(env)
    p = subprocess.run([BIN] + args, capture_output=True, text=True, env=e, timeout=600)
    return p.returncode, p.stdout


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def check(label, cond, info=""):
    print(("ok   " if cond else "FAIL ") + label + (("  " + info) if info and not cond else ""))
    if not cond:
        failures.append(label)


def validated(label, args, name, code=0, env=None):
    rc, out = run(args, env)
    check(label + " exit " + str(code), rc == code, "got %d" % rc)
    try:
        doc = json.loads(out)
        jsonschema.validate(doc, schema(name))
        check(label + " schema", True)
    except (ValueError, jsonschema.ValidationError) as e:
        check(label + " schema", False, str(e).splitlines()[0])
        doc = None
    return doc


cases = [
    ("validate", ["validate", "--spec", json.dumps(SECOND3)], "validate", 0),
    ("count", ["count", "--spec", json.dumps(SECOND3)], "count", 0),
    ("vertices", ["vertices", "--spec", json.dumps({"kind": "second", "n": 3, "t": 5, "a": [3, 3, 4], "b": 4})],
     "vertices", 0),
    ("classify", ["classify", "--spec", json.dumps({"kind": "third", "t": 7, "a": [5, 5, 5], "b": [5, 5, 5]})],
     "classify", 0),
    ("fan-check", ["fan-check", "--spec", json.dumps(SECOND3), "--samples", "20"], "fan-check", 0),
    ("degree", ["degree", "--sys", TRIPLE, "--method", "all"], "degree", 0),
    ("diff", ["diff", "--sys", TRIPLE], "diff", 0),
    ("eliminate", ["eliminate", "--sys", CIRCLE], "eliminate", 0),
    ("statement", ["statement", "--sys", PAIR], "statement", 0),
    ("koszul", ["koszul", "--sys", TRIPLE], "koszul", 0),
    ("koszul resolution", ["koszul", "--sys", json.dumps([FIRST3] * 3), "--method", "resolution"], "koszul", 0),
    ("demo superfluous", ["demo", "superfluous"], "demo-superfluous", 0),
    ("demo sylvester3q", ["demo", "sylvester3q"], "demo-sylvester3q", 0),
]
docs = {}
for label, args, name, code in cases:
    docs[label] = validated(label, args, name, code)

c = docs["count"]
check("count example", c is not None and c["closed"] == 7 and c["enumerated"] == 7 and c["agree"])
d = docs["degree"]
check("degree triple D", d is not None and d["D"] == 5 and d["cokernel"]["coker"] == 5)
s = docs["demo superfluous"]
check("demo summary", s is not None and s["summary"] == "eliminand: y^2-1; superfluous factor: 4y")
e = docs["eliminate"]
check("eliminand text", e is not None and e["eliminand"] == "y^2-1/2")
k = docs["koszul resolution"]
check("resolution coker", k is not None and k["coker"] == 5)

errors = [
    ("invalid spec", ["count", "--spec", json.dumps({"kind": "second", "n": 3, "t": 3, "a": [1, 1, 3], "b": 3})]),
    ("validate invalid", ["validate", "--spec", json.dumps({"kind": "second", "n": 3, "t": 3, "a": [1, 1, 3], "b": 3})]),
    ("malformed json", ["count", "--spec", "{\"kind\":"]),
    ("missing option", ["count"]),
    ("no subcommand", []),
    ("unknown demo", ["demo", "nothing"]),
    ("bad format", ["--format", "xml", "count", "--spec", json.dumps(SECOND3)]),
    ("bad method", ["degree", "--sys", TRIPLE, "--method", "guess"]),
]
for label, args in errors:
    rc, out = run(args)
    check(label + " exit 2", rc == 2, "got %d" % rc)
    if label == "validate invalid":
        try:
            doc = json.loads(out)
            ok = doc.get("valid") is False or "error" in doc
        except ValueError:
            ok = False
        check(label + " reports violations", ok)
        continue
    try:
        jsonschema.validate(json.loads(out), schema("error"))
        check(label + " error schema", True)
    except (ValueError, jsonschema.ValidationError) as ex:
        check(label + " error schema", False, str(ex).splitlines()[0])

# Repeat runs and the seed default.
for args in (["degree", "--sys", TRIPLE, "--method", "all"], ["koszul", "--sys", PAIR], ["demo", "sylvester3q"]):
    a, b = run(args)[1], run(args)[1]
    check("byte-identical " + args[0], a == b)
    explicit = run(["--seed", "9"] + args)[1]
    via_env = run(args, {"BEZOUT_SEED": "9"})[1]
    check("BEZOUT_SEED default " + args[0], explicit == via_env)

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "out.json")
    rc, out = run(["--out", path, "count", "--spec", json.dumps(SECOND3)])
    with open(path) as f:
        written = f.read()
    check("--out writes the report", rc == 0 and written == run(["count", "--spec", json.dumps(SECOND3)])[1])

    mm = os.path.join(tmp, "m.mtx")
    rc, out = run(["eliminate", "--sys", CIRCLE, "--mm", mm])
    ok = rc == 0 and os.path.exists(mm)
    if ok:
        with open(mm) as f:
            lines = f.read().splitlines()
        ok = lines[0].startswith("%%MatrixMarket matrix coordinate")
        body = [l for l in lines if not l.startswith("%")]
        rows, cols, nnz = map(int, body[0].split())
        ok = ok and len(body) == nnz + 1
        for l in body[1:]:
            i, j, _ = l.split()
            ok = ok and 1 <= int(i) <= rows and 1 <= int(j) <= cols
    check("MatrixMarket dump", ok)

rc, out = run(["--format", "text", "demo", "superfluous"])
check("text format", rc == 0 and out.rstrip().endswith("eliminand: y^2-1; superfluous factor: 4y"))
rc, out = run(["--format", "text", "count", "--spec", json.dumps(SECOND3)])
check("text count", rc == 0 and "closed" in out and "7" in out)

print("%d failing" % len(failures))
sys.exit(1 if failures else 0)
