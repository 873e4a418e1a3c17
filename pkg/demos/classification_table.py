"""
Reproducing the classification up to rank 4
===========================================

Every catalog form, every choice of crossed nodes: the Levi-form computation
against the closed-form conditions.  Raise MAX_RANK to 6 for the full check
(about 40 seconds).
"""

from orbit_concavity import enumerate_and_crosscheck

MAX_RANK = 4
report = enumerate_and_crosscheck(MAX_RANK)
print(report.summary_table())

# %%
# The families whose answer depends on Phi, with the Phi that fail.
failing = {}
for row in report.rows:
    if row.status == "agree" and row.decision_algorithmic == "Not":
        failing.setdefault(row.form, []).append(row.phi)
for form, phis in failing.items():
    print(f"{form:<12}", " ".join("{" + ",".join(map(str, p)) + "}" for p in phis))
