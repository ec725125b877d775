"""Run the full check harness and write report files.

Hard rows back finite identities and inequalities; reported-only rows
carry conjecture instances and asymptotic trends as data.  Reports land
in ./reports as structured text and CSV.

Run:  python demos/verification_report.py
"""

import os

from sqgraphs import verify as V
from sqgraphs.multigraph import Params

OUT = "reports"
os.makedirs(OUT, exist_ok=True)

suites = {
    "conjecture": V.conjecture_checks(Params(2, 2, 1), [4, 5, 6]),
    "identities": V.identity_checks(a_max=5, r_max=4),
    "conditions": V.condition_checks(),
    "counting": V.counting_checks(4, 2, 2) + V.counting_checks(5, 2, 2),
    "transformations": V.transformation_checks(trials=300),
}

total_hard = 0
for name, rows in suites.items():
    txt, csv_path = V.write_reports(rows, os.path.join(OUT, f"verify_{name}"))
    hard = V.hard_failures(rows)
    total_hard += len(hard)
    statuses = {}
    for r in rows:
        statuses[r.status] = statuses.get(r.status, 0) + 1
    print(f"{name:<16} {statuses}  ->  {txt}")
    for r in hard:
        print(f"  HARD FAIL: {V.format_report_line(r)}")

print()
if total_hard:
    print(f"{total_hard} hard failure(s).")
    print("The clone-preservation rows are a known, counterexample-backed")
    print("limitation of the row-copy transformation; every other hard check")
    print("is expected to pass.")
else:
    print("all hard checks passed")
