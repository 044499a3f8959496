#!/usr/bin/env python3
"""Byte-exact golden tests for the rba command-line tool.

Usage: cli_golden.py /path/to/rba
"""

import json
import subprocess
import sys

BINARY = sys.argv[1]
failures = 0


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True)


def check(name, args, *, stdout=None, exit_code=0, stdout_pred=None):
    global failures
    r = run(*args)
    problems = []
    if r.returncode != exit_code:
        problems.append(f"exit {r.returncode} != {exit_code} (stderr: {r.stderr.strip()!r})")
    if stdout is not None and r.stdout != stdout:
        problems.append(f"stdout {r.stdout!r} != {stdout!r}")
    if stdout_pred is not None and not stdout_pred(r.stdout):
        problems.append(f"stdout predicate failed on {r.stdout!r}")
    if problems:
        failures += 1
        print(f"[FAIL] {name}: " + "; ".join(problems))
    else:
        print(f"[PASS] {name}")


# --- eval -------------------------------------------------------------
check("eval product symbolic", ["eval", "P(1)*P(1)"],
      stdout="lambda*P(1) + 2*P(P(1))\n")
check("eval product weight 0", ["eval", "P(1)*P(1)", "--weight", "0"],
      stdout="2*P(P(1))\n")
check("eval letters", ["eval", "x*y"], stdout="x*y\n")
check("eval negation", ["eval", "--", "-x"], stdout="-x\n")
check("eval negation in parens", ["eval", "(-x)+x"], stdout="0\n")
check("eval square brackets", ["eval", "[1]*[1]", "--weight", "1/2"],
      stdout="1/2*P(1) + 2*P(P(1))\n")
check("eval json", ["eval", "x", "--output", "json"],
      stdout='{"terms":[{"word":[{"atom":"x"}],"coeff":{"0":[1,1]}}]}\n')
check("eval zero json", ["eval", "x - x", "--output", "json"],
      stdout='{"terms":[]}\n')
check("eval parse error", ["eval", "P("], exit_code=2)
check("eval rejects cop", ["eval", "cop(x)"], exit_code=2)
check("eval respects alphabet", ["eval", "z", "--alphabet", "x,y"], exit_code=2)

# --- S ------------------------------------------------------------------
check("antipode of a letter", ["S", "x", "--weight", "0"], stdout="-x\n")
check("antipode of P(x)", ["S", "P(x)", "--weight", "0"],
      stdout="-P(x) + x*P(1)\n")
check("antipode needs weight 0", ["S", "x"], exit_code=2)
check("antipode at nonzero weight", ["S", "x", "--weight", "2"], exit_code=2)

# --- cop ----------------------------------------------------------------
check("coproduct of a letter", ["cop", "x"], stdout="x (x) 1 + 1 (x) x\n")
check("coproduct of P(1)", ["cop", "P(1)"],
      stdout="P(1) (x) 1 + 1 (x) P(1)\n")
check("coproduct of 1", ["cop", "1"], stdout="1 (x) 1\n")
check("coproduct of the sandwich word", ["cop", "P(1) x P(1)", "--alphabet", "x"],
      stdout="lambda*x (x) P(1) + lambda*P(1) (x) x + x*P(1) (x) P(1) + "
             "2*x (x) P(P(1)) + 2*P(P(1)) (x) x + P(1)*x*P(1) (x) 1 + "
             "P(1)*x (x) P(1) + P(1) (x) P(1)*x + P(1) (x) x*P(1) + "
             "1 (x) P(1)*x*P(1)\n")
check("coproduct json shape", ["cop", "x", "--output", "json"],
      stdout_pred=lambda s: json.loads(s)["tensor_terms"][0]["left"] == [{"atom": "x"}])

# --- enum ---------------------------------------------------------------
check("enumeration counts to degree 1", ["enum", "--alphabet", "x", "--max-degree", "1",
                                         "--count"],
      stdout="0:1 1:2\n")
check("enumeration counts to degree 2", ["enum", "--alphabet", "x", "--max-degree", "2",
                                         "--count"],
      stdout="0:1 1:2 2:5\n")
check("enumeration words degree 0", ["enum", "--alphabet", "x", "--max-degree", "0"],
      stdout="1\n")
check("enumeration lists degree 1", ["enum", "--alphabet", "x", "--max-degree", "1"],
      stdout="1\nP(1)\nx\n")
check("enumeration json", ["enum", "--alphabet", "x", "--max-degree", "1", "--count",
                           "--output", "json"],
      stdout_pred=lambda s: json.loads(s)["counts"] == {"0": 1, "1": 2})

# --- check --------------------------------------------------------------
check("law: rota-baxter", ["check", "--law", "rb", "--alphabet", "x", "--max-degree", "3"],
      stdout_pred=lambda s: "failures: 0" in s)
check("law: associativity", ["check", "--law", "assoc", "--alphabet", "x",
                             "--max-degree", "2"],
      stdout_pred=lambda s: "failures: 0" in s)
check("law: unit", ["check", "--law", "unit", "--alphabet", "x,y", "--max-degree", "3"],
      stdout_pred=lambda s: "failures: 0" in s)
check("law: coassociativity", ["check", "--law", "coassoc", "--alphabet", "x",
                               "--max-degree", "3"],
      stdout_pred=lambda s: "failures: 0" in s)
check("law: counit", ["check", "--law", "counit", "--alphabet", "x", "--max-degree", "3"],
      stdout_pred=lambda s: "failures: 0" in s)
check("law: bialgebra", ["check", "--law", "bialgebra", "--alphabet", "x",
                         "--max-degree", "3"],
      stdout_pred=lambda s: "failures: 0" in s)
check("law: antipode", ["check", "--law", "antipode", "--alphabet", "x",
                        "--max-degree", "4", "--weight", "0"],
      stdout_pred=lambda s: "failures: 0" in s)
check("law: grading", ["check", "--law", "grading", "--alphabet", "x",
                       "--max-degree", "3", "--weight", "0"],
      stdout_pred=lambda s: "failures: 0" in s)
check("law: counterexample", ["check", "--law", "counterexample"],
      stdout_pred=lambda s: "--- symbolic weight ---" in s and "--- weight 0 ---" in s
      and "counterexample reproduced" in s)
check("antipode check needs weight 0", ["check", "--law", "antipode",
                                        "--alphabet", "x"], exit_code=2)
check("grading check needs weight 0", ["check", "--law", "grading",
                                       "--alphabet", "x"], exit_code=2)
check("counterexample json", ["check", "--law", "counterexample", "--output", "json"],
      stdout_pred=lambda s: json.loads(s)["pass"] is True
      and json.loads(s)["symbolic"]["has_violations"] is True
      and json.loads(s)["weight_zero"]["has_violations"] is False)

# --- usage --------------------------------------------------------------
check("unknown law", ["check", "--law", "nope"], exit_code=2)
check("unknown output", ["eval", "x", "--output", "yaml"], exit_code=2)
check("missing subcommand", [], exit_code=2)
check("bad weight", ["eval", "x", "--weight", "w"], exit_code=2)

print()
if failures:
    print(f"{failures} golden check(s) failed")
    sys.exit(1)
print("all golden checks passed")
