#!/usr/bin/env python3
"""End-to-end checks of the hadamard6 CLI. Usage: cli_tests.py <binary>."""

import math
import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = sys.argv[1] if len(sys.argv) > 1 else "hadamard6"
PASSED = 0


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True)


def check(name, cond, proc=None):
    global PASSED
    if not cond:
        msg = f"FAIL {name}"
        if proc is not None:
            msg += f"\n  exit={proc.returncode}\n  stdout={proc.stdout}\n  stderr={proc.stderr}"
        print(msg)
        sys.exit(1)
    PASSED += 1
    print(f"ok {name}")


def parse_floats(stdout):
    vals = {}
    for line in stdout.splitlines():
        if ":" in line:
            key, _, rest = line.partition(":")
            try:
                vals[key.strip()] = float(rest.strip())
            except ValueError:
                pass
    return vals


def main():
    tmp = Path(tempfile.mkdtemp(prefix="hadamard6_cli_"))

    # generate + verify round trip preserves the reported residuals
    out = tmp / "h.mat"
    gen = run("gen", "--theta", "0.7", "--phi", "0.9", "--psi1", "0.3", "-o", str(out))
    check("gen generic exit 0", gen.returncode == 0, gen)
    check("gen prints regime", "regime: Generic" in gen.stdout, gen)
    gen_vals = parse_floats(gen.stdout)
    check("gen residual small", gen_vals["unitarity_error"] < 1e-9, gen)

    ver = run("verify", str(out))
    check("verify exit 0", ver.returncode == 0, ver)
    check("verify reducible", "h2_reducible: yes" in ver.stdout, ver)
    ver_vals = parse_floats(ver.stdout)
    for key in ("unimodular_error", "unitarity_error"):
        check(f"round trip preserves {key}",
              abs(ver_vals[key] - gen_vals[key]) < 1e-12, ver)

    # degrees flag: same point expressed in degrees
    out_deg = tmp / "hdeg.mat"
    deg = run("--degrees", "gen", "--theta", str(math.degrees(0.7)), "--phi",
              str(math.degrees(0.9)), "--psi1", str(math.degrees(0.3)), "-o", str(out_deg))
    check("gen --degrees exit 0", deg.returncode == 0, deg)
    eq_deg = run("equiv", str(out), str(out_deg))
    check("degrees point equivalent", eq_deg.returncode == 0, eq_deg)

    # doubly degenerate theta = 0 is redirected to gen-limit
    lim = run("gen", "--theta", "0", "--phi", "1.0", "--psi1", "0.2")
    check("gen at theta 0 exits 2", lim.returncode == 2, lim)
    check("gen names gen-limit", "gen-limit" in lim.stderr, lim)

    # the D6 point (9 digits) takes the degenerate path automatically
    d6 = tmp / "d6.mat"
    gen_d6 = run("gen", "--theta", "0.955316618", "--phi", "0.785398163",
                 "--psi1", "0.4", "-o", str(d6))
    check("gen degenerate exit 0", gen_d6.returncode == 0, gen_d6)
    check("gen degenerate tagged", "regime: DegenerateA" in gen_d6.stdout, gen_d6)

    # equivalence against a row/column-permuted, rephased copy
    lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
    rows = [[float(tok) for tok in l.split()] for l in lines]
    entries = [[complex(r[2 * c], r[2 * c + 1]) for c in range(6)] for r in rows]
    perm = [3, 0, 5, 1, 4, 2]
    scrambled = [[entries[perm[i]][j] * 1j for j in range(6)] for i in range(6)]
    scr_path = tmp / "scrambled.mat"
    scr_path.write_text("\n".join(
        " ".join(f"{v.real:.17g} {v.imag:.17g}" for v in row) for row in scrambled) + "\n")
    eq = run("equiv", str(out), str(scr_path))
    check("equiv permuted copy exit 0", eq.returncode == 0, eq)
    check("equiv prints witness", "row_perm:" in eq.stdout and "col_perm:" in eq.stdout, eq)

    # inequivalent pair
    f1 = tmp / "lim1.mat"
    gl = run("gen-limit", "theta0", "--phi", "1.5708", "--z", "0", "-o", str(f1))
    check("gen-limit exit 0", gl.returncode == 0, gl)
    check("gen-limit family line", "F6(2)" in gl.stdout, gl)
    ver_lim = run("verify", str(f1))
    check("gen-limit output verifies", ver_lim.returncode == 0, ver_lim)
    ne = run("equiv", str(out), str(f1))
    check("equiv inequivalent exit 1", ne.returncode == 1, ne)
    check("equiv says no", "equivalent: no" in ne.stdout, ne)

    # exceptional direction
    exc = run("gen-limit", "theta0", "--phi", "0.3", "--z", str(2 * math.pi / 3))
    check("gen-limit exceptional exit 2", exc.returncode == 2, exc)

    # halfpi limit
    hp = run("gen-limit", "halfpi", "--phi", "0.9", "--z", "0.4", "-o", str(tmp / "hp.mat"))
    check("gen-limit halfpi exit 0", hp.returncode == 0, hp)
    check("halfpi family line", "(F6(2))^T" in hp.stdout, hp)

    # verify negative verdict and parse errors
    ones = tmp / "ones.mat"
    ones.write_text("\n".join(" ".join(["1 0"] * 6) for _ in range(6)) + "\n")
    v1 = run("verify", str(ones))
    check("verify all-ones exit 1", v1.returncode == 1, v1)

    bad = tmp / "bad.mat"
    bad.write_text("\n".join(" ".join(["1 0"] * 6) for _ in range(5)) +
                   "\n1 0 1 0 1 0 1 0 1 0 1\n")
    v2 = run("verify", str(bad))
    check("verify 11-float line exit 4", v2.returncode == 4, v2)
    v3 = run("verify", str(tmp / "missing.mat"))
    check("verify missing file exit 4", v3.returncode == 4, v3)

    # scan: 5x5x5 with margin, then a margin-0 scan including theta = 0
    tsv = tmp / "scan.tsv"
    sc = run("scan", "--theta-steps", "5", "--phi-steps", "5", "--psi-steps", "5",
             "--margin", "0.05", "-o", str(tsv))
    check("scan exit 0", sc.returncode == 0, sc)
    body = tsv.read_text().splitlines()
    check("scan header", body[0].split("\t") ==
          ["theta", "phi", "psi1", "regime", "unimod_err", "unit_err", "reducible"])
    data = [l for l in body[1:] if l and not l.startswith("#")]
    check("scan record count", len(data) == 125)
    built = [l for l in data if "\t-\t" not in l]
    check("scan has built points", len(built) > 0)
    check("scan built points pass", all(float(l.split("\t")[5]) < 1e-9 for l in built))

    tsv0 = tmp / "scan0.tsv"
    sc0 = run("scan", "--theta-steps", "4", "--phi-steps", "4", "--psi-steps", "2",
              "--margin", "0", "-o", str(tsv0))
    check("margin-0 scan exit 0", sc0.returncode == 0, sc0)
    rows0 = [l.split("\t") for l in tsv0.read_text().splitlines()[1:] if l and not l.startswith("#")]
    theta0_rows = [r for r in rows0 if float(r[0]) == 0.0]
    check("theta-0 rows present", len(theta0_rows) == 8)
    check("theta-0 rows tagged and skipped",
          all(r[3] == "DoublyDegenerateTheta0" and r[4] == "-" for r in theta0_rows))

    # custom tolerance flags are honored: absurdly tight unimodularity fails
    tight = run("--tol-unimod", "1e-18", "verify", str(out))
    check("tight tolerance rejects", tight.returncode == 1, tight)

    # invalid tolerance combination is a usage error
    badtol = run("--tol-unimod", "-1", "verify", str(out))
    check("negative tolerance exit 2", badtol.returncode == 2, badtol)

    # equivalence testing demands Hadamard inputs
    nh = run("equiv", str(ones), str(ones))
    check("equiv non-Hadamard exit 3", nh.returncode == 3, nh)

    # unknown flags are usage errors
    unk = run("gen", "--nope", "1")
    check("unknown flag exit 2", unk.returncode == 2, unk)

    print(f"all {PASSED} CLI checks passed")


if __name__ == "__main__":
    main()
