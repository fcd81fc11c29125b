#!/usr/bin/env python3
"""End-to-end checks of the fourfold CLI: pipelines, exit codes, determinism."""

import json
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1] if len(sys.argv) > 1 else "fourfold"
failures = []


def run(*args, stdin=None, expect_code=0):
    proc = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True)
    if expect_code is not None and proc.returncode != expect_code:
        failures.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect_code}\n"
            f"stderr: {proc.stderr}"
        )
    return proc


def check(cond, label):
    if not cond:
        failures.append(label)


with tempfile.TemporaryDirectory() as tmp:
    # block emission and invariants
    out = run("block", "surface-product", "3", "3", "--json").stdout
    sp33 = json.loads(out)
    check(sp33["euler"] == 16, "block euler")
    check(sp33["simplicial_volume"] == {"known": 96}, "block volume")
    check(sp33["b1"] == {"known": 12}, "block b1")

    # round trip through validate, reading from stdin
    v = json.loads(run("validate", "-", stdin=out).stdout)
    check(v["verdict"] == "holds", "validate verdict")

    # determinism: identical argv => byte-identical stdout
    again = run("block", "surface-product", "3", "3", "--json").stdout
    check(out == again, "deterministic stdout")

    # write descriptor files for later commands
    sp_path = os.path.join(tmp, "sp33.json")
    with open(sp_path, "w") as f:
        f.write(out)
    k3_path = os.path.join(tmp, "k3.json")
    run("block", "k3", "-o", k3_path)

    # K3 admissibility gives exit 0 under --assert
    run("--assert", "check", "bf", k3_path, expect_code=0)
    # an even product fails cond2, --assert turns that into exit 1
    even_path = os.path.join(tmp, "sp22.json")
    run("block", "surface-product", "2", "2", "-o", even_path)
    run("--assert", "check", "bf", even_path, expect_code=1)
    # without --assert the exit stays 0
    run("check", "bf", even_path, expect_code=0)

    # connected sum pipeline: e additivity
    s1s3_path = os.path.join(tmp, "s1xs3.json")
    run("block", "s1xs3", "-o", s1s3_path)
    summed = json.loads(run("sum", sp_path, s1s3_path).stdout)
    check(summed["euler"] == 14, "sum euler")
    check(summed["b1"] == {"known": 13}, "sum b1")

    # surgery: the Kodaira pipeline
    t4_path = os.path.join(tmp, "t4.json")
    run("block", "surface-product", "1", "1", "-o", t4_path)
    kodaira = json.loads(
        run("surger", t4_path, "--effect", "kill", "--luttinger").stdout
    )
    check(kodaira["b1"] == {"known": 3}, "surgered b1")
    kinds = {c["kind"] for c in kodaira["certificates"]}
    check("sij_even" in kinds and "sw_odd_canonical" in kinds, "surgered certificates")

    # blowup
    blown = json.loads(run("blowup", k3_path, "-n", "2").stdout)
    check(blown["euler"] == 26 and blown["signature"] == -18, "blowup numbers")
    check(blown["w2"] == "nonspin", "blowup w2")

    # ht check with strict flag
    ht = json.loads(run("check", "ht", sp_path, "--strict").stdout)
    check(ht["gromov_1295"]["verdict"] == "holds", "ht gromov verdict")
    check(ht["entropy_54"]["margin"]["c0"] == "352/27", "ht entropy margin")

    # ricci obstruction through files
    n_path = os.path.join(tmp, "n.json")
    bars = [os.path.join(tmp, f"bar{i}.json") for i in range(3)]
    for p in bars:
        run("block", "cp2bar", "-o", p)
    two_s1s3 = [os.path.join(tmp, f"s{i}.json") for i in range(2)]
    for p in two_s1s3:
        run("block", "s1xs3", "-o", p)
    run("sum", *two_s1s3, *bars, "-o", n_path)
    ricci = json.loads(
        run("check", "ricci", sp_path, sp_path, sp_path, "--n", n_path).stdout
    )
    check(ricci["verdict"] == "fails", "ricci worked case (2e+3s = -7)")

    # eval curvature bounds
    ev = json.loads(run("eval", sp_path, sp_path).stdout)
    check(ev["c1sq_sum"] == "64/1", "eval c1^2 sum")
    check(ev["yamabe_upper_decimal"].startswith("-142.17"), "eval yamabe decimal")

    # enumerate: documented witness as the first hit at these bounds
    enum = json.loads(
        run(
            "enumerate", "--kind", "R",
            "--summands", f"{sp_path},{sp_path}",
            "--gmax", "5", "--hmax", "5", "--l1max", "12", "--l2max", "4",
            "--csv", os.path.join(tmp, "wit.csv"),
        ).stdout
    )
    tuples = [(w["g"], w["h"], w["l1"], w["l2"]) for w in enum["witnesses"]]
    check((5, 5, 9, 1) in tuples, "documented witness present")
    check(all(w["property"]["verdict"] == "holds" for w in enum["witnesses"]),
          "witness properties hold")
    with open(os.path.join(tmp, "wit.csv")) as f:
        csv_lines = f.read().strip().splitlines()
    check(csv_lines[0] == "g,h,l1,l2,alpha,beta,middle,band_lo,band_hi,property",
          "witness csv header")
    check(len(csv_lines) == 1 + enum["count"], "witness csv rows")

    first = json.loads(
        run(
            "enumerate", "--kind", "R",
            "--summands", f"{sp_path},{sp_path}",
            "--gmax", "5", "--hmax", "5", "--l1max", "12", "--l2max", "4",
            "--first",
        ).stdout
    )
    check(first["count"] == 1, "--first yields a single witness")

    # verify-lemmas: the factor-2 tension is reported
    lemmas = json.loads(
        run("verify-lemmas", "--id", "connected-sum-2e-plus-3s",
            "--g", "3..3", "--h", "3..3").stdout
    )
    check(lemmas[0]["entries"][0]["residual"] == "-16/1", "lemma residual")
    compact = json.loads(
        run("verify-lemmas", "--id", "connected-sum-2e-plus-3s",
            "--grid", "g=3..3,h=3..3,k=2..2").stdout
    )
    check(compact[0]["entries"][0]["residual"] == "-32/1", "lemma residual via --grid")
    run("verify-lemmas", "--id", "bogus", expect_code=2)

    # scan with csv and mod8 filter
    scan = json.loads(
        run("scan", "--a", "6..16", "--b", "-8..-2",
            "--csv", os.path.join(tmp, "scan.csv")).stdout
    )
    exceptional = [r for r in scan if r["status"] == "exceptional"]
    check(len(exceptional) == 4, "exceptional points flagged")
    filtered = json.loads(run("scan", "--a", "6..16", "--b", "-8..-2", "--mod8").stdout)
    check(all((r["a"] + r["b"]) % 8 == 0 for r in filtered), "mod8 filter")
    with open(os.path.join(tmp, "scan.csv")) as f:
        check(f.readline().strip() == "a,b,status,mod8,alpha,beta,bf_verdict",
              "scan csv header")

    # pi^2 refinement flag is accepted and does not change decided verdicts
    refined = json.loads(
        run("--pi2-digits", "40", "check", "ht", sp_path, "--strict").stdout
    )
    check(refined["gromov_1295"]["verdict"] == "holds", "refined verdict stable")

    # usage errors exit 2
    run("block", "no-such-kind", expect_code=2)
    run("surger", sp_path, "--effect", "explode", expect_code=2)

if failures:
    print("CLI test failures:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print("cli: all checks passed")
