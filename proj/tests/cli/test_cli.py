"""Exit codes and TSV output of the dtheta command-line tool.

Usage: test_cli.py <dtheta binary> <test data dir>
"""

import os
import subprocess
import sys
import tempfile

BIN, DATA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    rows = [line.split("\t") for line in p.stdout.splitlines()]
    return p.returncode, rows, p.stderr


def expect(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f"  ({detail})" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def data(name):
    return os.path.join(DATA, name)


code, rows, _ = run("field-info", data("sqrt5.chars"))
expect("field-info from a character file", code == 0 and rows[1][3] == "5"
       and abs(float(rows[1][5]) + 0.2406059) < 1e-6, rows)

code, rows, _ = run("field-info", "Q")
expect("field-info for Q", code == 0 and float(rows[1][4]) == 1.0 and float(rows[1][5]) == -0.5, rows)

code, _, err = run("field-info", data("garbage.chars"))
expect("malformed character file is an input error", code == 2 and "line 2" in err, err)

code, _, _ = run("field-info", data("missing.chars"))
expect("missing character file is an input error", code == 2)

code, rows, _ = run("theta-check", "--field", "Q", "--k", "1", "--x", "4", "--x", "0.5,0.2")
expect("theta-check passes", code == 0 and len(rows) == 3 and float(rows[1][6]) < 1e-10, rows)

code, rows, _ = run("theta-check", "--field", "cubic7", "--x", "-1")
expect("x = -1 runs the exact evaluation and fails as stated", code == 1 and rows[0][0] == "lhs_re"
       and float(rows[1][4]) < 1e-10, rows)

code, _, _ = run("theta-check", "--field", "Q", "--x", "2", "--tol", "1e-30")
expect("an unreachable tolerance fails the check", code == 1)

code, _, _ = run("theta-check", "--field", "Q", "--x", "0")
expect("x = 0 is rejected", code == 2)

code, _, _ = run("theta-check", "--field", "Q", "--x", "abc")
expect("non-numeric x is rejected", code == 2)

code, _, _ = run("theta-check", "--field", "Q")
expect("missing option is a usage error", code == 2)

code, _, _ = run("no-such-command")
expect("unknown subcommand is a usage error", code == 2)

code, rows, _ = run("hlr-check", "--x", "1", "--zeros", data("riemann30.txt"))
expect("hlr-check at x = 1", code == 0 and float(rows[1][3]) < 1e-4, rows)

code, rows, _ = run("hlr-check", "--x", "4", "--exact", "--zeros", data("riemann30.txt"))
expect("hlr-check exact mode", code == 0 and float(rows[1][3]) < 1e-12, rows)

code, _, _ = run("hlr-check", "--x", "1", "--zeros", data("missing.txt"))
expect("missing zeros file is an input error", code == 2)

code, _, err = run("hlr-check", "--x", "1", "--zeros", data("unordered_zeros.txt"))
expect("unordered zeros file is an input error", code == 2 and "line 3" in err, err)

code, _, _ = run("hlr-check", "--x", "1", "--zeros", data("empty_zeros.txt"))
expect("empty zeros file is an input error", code == 2)

code, rows, _ = run("inverse-check", "--field", "Q", "--k", "2", "--x", "2", "--zeros", data("riemann30.txt"),
                    "--count", "20")
expect("inverse-check for Q, k = 2", code == 0 and rows[1][5].startswith("2.0") and float(rows[1][3]) < 1e-5, rows)

with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "zeros.txt")
    code, rows, _ = run("zeros-scan", "--field", "Q", "--range", "0,30", "--step", "0.05", "--emit", out)
    expect("zeros-scan finds three zeros below 30", code == 0 and len(rows) == 4
           and abs(float(rows[1][0]) - 14.134725141734693) < 1e-6, rows)
    code, rows, _ = run("inverse-check", "--field", "Q", "--x", "2", "--zeros", out)
    expect("emitted zeros feed inverse-check", code == 0 and rows[1][5].startswith("3.0"), rows)

    code, rows, _ = run("zeros-scan", "--field", data("sqrt5.chars"), "--range", "0,40", "--emit", out)
    code2, rows2, _ = run("dgv-check", "--field", data("sqrt5.chars"), "--x", "4", "--zeros", out)
    expect("dgv-check with scanned zeros", code == 0 and code2 == 0 and float(rows2[1][3]) < 1e-5, rows2)

code, _, _ = run("zeros-scan", "--field", "Q", "--range", "30,0")
expect("reversed range is rejected", code == 2)

code, rows, _ = run("phi-check", "--field", data("sqrt5.chars"), "--z", "0.5")
expect("phi-check", code == 0 and float(rows[1][6]) < 1e-6, rows)

code, _, _ = run("phi-check", "--field", "Q", "--z", "0,1")
expect("phi-check outside the strip", code == 2)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
