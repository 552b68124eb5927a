"""End-to-end checks of the command-line tool."""

import json
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def run(*args, code=0):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    if p.returncode != code:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, expected {code}\n{p.stderr}")
    return p


def check(cond, what):
    if not cond:
        failures.append(what)


r = run("verify", "upcycle", "fixture:u4", "--n", "4")
check(json.loads(r.stdout)["valid"], "u4 valid")
r = run("verify", "uptorus", "fixture:minimal", "--window", "2x2", "--json")
check(json.loads(r.stdout)["valid"], "--json accepted after a subcommand")
r = run("verify", "family", "fixture:S_invalid", "--x", "4", code=1)
check(json.loads(r.stdout)["cross_member_total"] > 0, "S reports a cross-member duplicate")
run("verify", "upcycle", "001*111*", "--n", "4", code=1)
run("verify", "upcycle", "01!", "--n", "2", code=2)
run("verify", "bogus", "fixture:u4", code=2)
run("search", code=2)

r = run("generate", "debruijn", "2", "4")
check(r.stdout.strip() == "0000100110101111", "debruijn 2 4")
r = run("generate", "necklace", "4", "2")
check(r.stdout.strip() == "00112233", "necklace")
r = run("generate", "altdb", "2", "2", "1")
check(len(r.stdout.strip().splitlines()) == 2, "altdb prints two lines")

r = run("construct", "lift", "003*112*", "--n", "4", "--alphabet", "4")
check(r.stdout.strip() == "00301120003111210032112200331123", "lift")

r = run("locate", "fixture:locate_p")
out = json.loads(r.stdout)
check(out["a"] == [0, 5, 7] and out["b"] == [5, 2], "locate a and b")

r = run("enumerate-slicings", "fixture:upcycle64", "--block", "8", "--x", "4")
rep = json.loads(r.stdout)
check(42 in (rep["valid_including_whole"], rep["valid_proper"]), "42 slicings")

r = run("search", "--alphabet", "2", "--window", "2x2", "--dims", "3x4", "--mode", "torus", "--dedup")
check(json.loads(r.stdout)["canonical_count"] == 1, "minimal torus class")

with tempfile.TemporaryDirectory() as d:
    torus = os.path.join(d, "m.txt")
    run("construct", "torus-from-upcycle", "fixture:u4", "--s", "fixture:s64", "--x", "4", "--y", "2", "--out", torus)
    run("verify", "uptorus", torus, "--window", "3x4")
    img = os.path.join(d, "m.ppm")
    run("render", torus, "--out", img, "--transpose")
    with open(img, "rb") as f:
        check(f.read().startswith(b"P6\n64 8\n255\n"), "transposed render is 64 wide, 8 tall")
    run("render", "fixture:minimal", "--out", img, "--scale", "16")
    with open(img, "rb") as f:
        check(f.read().startswith(b"P6\n64 48\n255\n"), "scaled render size")
    run("fixtures", "export", "all", "--dir", d)
    run("verify", "upmatrix", os.path.join(d, "upmatrix_3x6.grid"), "--window", "2x2")
    fam = os.path.join(d, "f.txt")
    run("slice", "fixture:upcycle64", "--cuts", "0,8,16,24,32,40,48,56", "--x", "4", "--out", fam)
    run("verify", "family", fam, "--x", "4")
    run("verify", "family", os.path.join(d, "nope.txt"), "--x", "4", code=2)

r = run("fixtures", "list")
check("upmatrix_2x11" in r.stdout, "fixture list")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
