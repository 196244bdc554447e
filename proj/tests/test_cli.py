#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: schemas, exit codes,
error diagnostics, and byte-stable output."""

import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1] if len(sys.argv) > 1 else "hyptor"
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(f"{args}: exit {proc.returncode} != {expect}\n{proc.stderr}")
    return proc


def check(cond, msg):
    if not cond:
        FAILURES.append(msg)


def main():
    tmp = Path(tempfile.mkdtemp(prefix="hyptor_cli_"))

    # plancherel: the d=3 closed form P(z) = -z^2
    out = run("plancherel", "--dim", "3", "--sigma", "0")
    doc = json.loads(out.stdout)
    check(doc == {"coeffs": [0.0, -1.0], "degree": 2}, f"plancherel d3: {doc}")

    out = run("plancherel", "--dim", "5", "--sigma", "1,0")
    doc = json.loads(out.stdout)
    check(doc["degree"] == 4 and len(doc["coeffs"]) == 3, f"plancherel d5: {doc}")

    # spin weights parse as p/q
    run("plancherel", "--dim", "3", "--sigma", "3/2", "--group", "Spin")
    # ...but are rejected for SO0
    run("plancherel", "--dim", "3", "--sigma", "3/2", expect=1)

    # stationary-phase on f = |x|^2, g = 1
    f_doc = {"m": 2, "D": 2, "terms": [{"alpha": [2, 0], "c": 1.0}, {"alpha": [0, 2], "c": 1.0}]}
    g_doc = {"m": 2, "D": 2, "terms": [{"alpha": [0, 0], "c": 1.0}]}
    (tmp / "f.json").write_text(json.dumps(f_doc))
    (tmp / "g.json").write_text(json.dumps(g_doc))
    out = run("stationary-phase", "--f", str(tmp / "f.json"), "--g", str(tmp / "g.json"),
              "--order", "0", "--oracle", "60")
    doc = json.loads(out.stdout)
    entry = doc["entries"][0]
    check(abs(entry["a"] + math.pi / 2) < 1e-12, f"stationary a0: {entry}")
    check(abs(entry["b"] + math.pi * 0.5772156649015329 / 2) < 1e-12, f"stationary b0: {entry}")
    check(doc["oracle"][0]["converged"] is True, "oracle convergence flag")
    check(abs(doc["oracle"][0]["residual"]) < 1e-3, f"oracle residual: {doc['oracle'][0]}")

    # trace: stable header, finite cells, byte-identical reruns
    manifold = {
        "dim": 3, "volume": 1.0, "kappa": 1, "C1": 1.0, "C2": 1.0, "cn": 1.0,
        "spectrum": [{"ell": 1.0, "ell0": 1.0, "angles": [0.0]}],
    }
    (tmp / "m.json").write_text(json.dumps(manifold))
    out1 = run("trace", "--manifold", str(tmp / "m.json"), "--nu", "0", "--t", "0.1:0.3:4")
    out2 = run("trace", "--manifold", str(tmp / "m.json"), "--nu", "0", "--t", "0.1:0.3:4")
    check(out1.stdout == out2.stdout, "trace output is not byte-identical across runs")
    lines = out1.stdout.strip().splitlines()
    check(lines[0] == "t,I,H,T,Tprime,total", f"csv header: {lines[0]}")
    check(len(lines) == 5, f"csv rows: {len(lines)}")
    for line in lines[1:]:
        for cell in line.split(","):
            check(math.isfinite(float(cell)), f"non-finite cell {cell}")

    # compact manifold: T and T' columns are zero
    compact = {"dim": 3, "volume": 2.0, "kappa": 0, "spectrum": []}
    (tmp / "compact.json").write_text(json.dumps(compact))
    out = run("trace", "--manifold", str(tmp / "compact.json"), "--nu", "1", "--t", "0.5:0.5:1")
    row = out.stdout.strip().splitlines()[1].split(",")
    check(float(row[3]) == 0.0 and float(row[4]) == 0.0, f"compact parabolic columns: {row}")

    # expand: the t^0 log t coefficient is absent
    out = run("expand", "--manifold", str(tmp / "m.json"), "--nu", "0", "--order", "3")
    doc = json.loads(out.stdout)
    check(doc["hyperbolic_omitted"] is True, "expand: hyperbolic_omitted flag")
    for term in doc["terms"]:
        beta = term["beta"]
        is_zero = beta == 0 or beta == "0"
        check(not (is_zero and term["log"]), f"t^0 log t term present: {term}")

    # torsion: three synthetic single-eigenvalue operators; det = lambda
    def exp_expansion(a, order=25):
        terms, c = [], 1.0
        for k in range(order + 1):
            terms.append({"beta": k, "c": c, "log": False})
            c *= -a / (k + 1)
        return {"terms": terms}

    spectral = {
        "p_data": [
            {"eigenvalues": [{"lam": a, "mult": 1.0}], "h": 0.0, "expansion": exp_expansion(a)}
            for a in (2.0, 3.0, 5.0)
        ]
    }
    (tmp / "s.json").write_text(json.dumps(spectral))
    out = run("torsion", "--spectral", str(tmp / "s.json"), "--tau", "0,0", "--dim", "3")
    doc = json.loads(out.stdout)
    expected_logT = 0.5 * math.log(2.0) - math.log(3.0) + 1.5 * math.log(5.0)
    check(abs(doc["logT"] - expected_logT) < 1e-7, f"torsion logT: {doc}")
    for z0 in doc["zeta0"]:
        check(abs(z0 - 1.0) < 1e-9, f"torsion zeta0: {doc}")

    # the same data with a nontrivial tau shifts every eigenvalue by
    # tau(Omega) = 3: det_p = a_p + 3
    out = run("torsion", "--spectral", str(tmp / "s.json"), "--tau", "1,0", "--dim", "3")
    doc = json.loads(out.stdout)
    shifted_logT = 0.5 * math.log(5.0) - math.log(6.0) + 1.5 * math.log(8.0)
    check(abs(doc["logT"] - shifted_logT) < 1e-6, f"torsion shifted logT: {doc}")

    # error paths
    out = run("trace", "--manifold", str(tmp / "missing.json"), "--nu", "0", "--t", "0.1:0.2:2",
              expect=1)
    check("cannot read manifest" in out.stderr, f"missing manifest message: {out.stderr}")

    (tmp / "bad.json").write_text('{"dim": 3,\n  "volume": oops}')
    out = run("trace", "--manifold", str(tmp / "bad.json"), "--nu", "0", "--t", "0.1:0.2:2",
              expect=1)
    check("line 2" in out.stderr and "column" in out.stderr,
          f"json diagnostic: {out.stderr}")

    run("trace", "--manifold", str(tmp / "m.json"), "--nu", "0", expect=2)  # missing --t
    run("definitely-not-a-subcommand", expect=2)

    out = run("--version")
    check("identity-order" in out.stdout, f"version string: {out.stdout}")

    run("check")  # exit 0 on a clean build

    if FAILURES:
        print("CLI TEST FAILURES:")
        for f in FAILURES:
            print(" -", f)
        sys.exit(1)
    print("cli tests passed")


if __name__ == "__main__":
    main()
