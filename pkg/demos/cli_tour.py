"""Drive every CLI subcommand and show the exit-code contract.

    python3 demos/cli_tour.py
"""

import subprocess
import sys

CMDS = [
    ["verify", "ncrs-poisson", "--max-order", "2"],
    ["verify", "ncrs-witt", "--orders", "1,1,1"],
    ["verify", "classical-poisson", "--leibniz", "--json"],
    ["apply", "ncrs-ricci", "K0", "f1 # f2", "g1"],
    ["apply", "classical-poisson", "Knm(1,-1)", "f1", "g1", "--format", "latex"],
    ["limit", "ncrs-integral", "--mode", "tensor-collapse"],
    ["limit", "ncrs-poisson-type-v1", "--verify"],
    ["trace", "ncrs-witt", "witt-jacobi", "--orders", "1,1,1"],
    ["table", "ncrs-poisson"],
    ["verify", "no-such-family"],  # usage errors exit 2, never 1
]

for argv in CMDS:
    proc = subprocess.run(
        [sys.executable, "-m", "rootspace"] + argv,
        capture_output=True,
        text=True,
    )
    print("$ rootspace " + " ".join(repr(a) if " " in a else a for a in argv))
    body = proc.stdout.strip() or proc.stderr.strip()
    lines = body.splitlines()
    for line in lines[:6]:
        print("  " + line)
    if len(lines) > 6:
        print("  ... (%d more lines)" % (len(lines) - 6))
    print("  [exit %d]" % proc.returncode)
    print()
