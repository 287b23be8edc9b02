"""
Driving the command line tool from Python
=========================================

``syzrank.cli.main`` takes the same arguments as the ``syzrank`` command.
The machine format is a JSON document with a fixed schema.
"""

import contextlib
import io
import json

from syzrank.cli import main

buffer = io.StringIO()
with contextlib.redirect_stdout(buffer):
    code = main(
        ["--ambient", "pn:2", "--poly", "x^5 + y^5 + x^2*y^2*z", "--find-singular",
         "--refine-isolated", "--oracles", "--format", "machine"]
    )
doc = json.loads(buffer.getvalue())
print("exit code", code)
for rec in doc["points"]:
    print(rec["point"], rec["status"], "seh =", rec["seh"], rec.get("isolated"))
print("oracles:", doc["oracle_summary"])

# %%
# The text format is meant for reading.
main(["--ambient", "toric:P1xP1", "--poly", "x1^2*y1^2 - x0^2*y0^2", "--point", "(1, 0, 0, 1)"])
