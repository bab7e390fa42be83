"""The command line as a library call: reports, exit codes and the
invariant suite."""

import io
import json

from vwb.cli import run

for argv in (
    ["moduli", "--r", "0", "--s", "1", "--d", "1"],
    ["end0-dims", "--r", "0", "--s", "5", "--d", "2"],
    ["moduli", "--r", "0", "--s", "7", "--d", "2"],
):
    buf = io.StringIO()
    code = run(argv + ["--json"], stdout=buf)
    doc = json.loads(buf.getvalue())
    print(" ".join(argv), "-> exit", code, doc["outputs"].get("h1_dim", doc["outputs"].get("h1")), doc["discrepancies"])

buf = io.StringIO()
run(["verify"], stdout=buf)
print(buf.getvalue())
