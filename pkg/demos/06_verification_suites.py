"""Run the four verification suites on a mid-size example and print tables.

Everything is deterministic in the root seed; a failing case would carry the
inputs needed to replay it.  The same suites back the `cq verify` command.
"""

from clusterq.graphs import builtin_setting
from clusterq.verify import (verify_common_cluster, verify_hl_correspondence,
                             verify_odd_vanishing, verify_t_system)

setting = builtin_setting("d4")
print(f"D4 with I0={sorted(setting.i0)}, I1={sorted(setting.i1)}\n")

for report in (
    verify_t_system(setting, seed=0),
    verify_hl_correspondence(setting, seed=0),
    verify_common_cluster(setting, pair_budget=40, seed=0),
    verify_odd_vanishing(setting, dim_budget=1, seed=0),
):
    print(report.format_table())
    print()
