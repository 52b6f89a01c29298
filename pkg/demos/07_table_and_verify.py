"""
Tables and the verification sweep
=================================

The same sweeps the CLI runs, from Python.
"""

from cm_degrees import sweeps

# %%
# A small slice of the degree table.
cfg = sweeps.SweepConfig(max_abs_delta=8, max_n=4)
print(sweeps.render_rows(sweeps.table_rows(cfg), "csv"))

# %%
# Closed forms against oracles on a quick grid.
report = sweeps.run_verify(sweeps.SweepConfig(max_abs_delta=30, max_n=8, oracle_cap=8))
for suite, (passed, failed) in report.counts.items():
    print(f"{suite:<18} {passed:>5} {failed}")
print("ok" if report.ok else report.minimal_counterexample())
