# Breakpoints closer than this (in time units) are treated as one breakpoint.
TIME_TOLERANCE = 1e-12
# Relative slope difference below which three breakpoints count as collinear.
COLLINEAR_TOLERANCE = 1e-12
# Relative change of entry-rate / exit-time-slope ratio that marks a kink of the exit curve.
KINK_TOLERANCE = 1e-12
# Relative residual volume below which an arc counts as empty.
DRAIN_TOLERANCE = 1e-9
# Absolute tolerance for commodity curves summing to the arc aggregate.
COMMODITY_TOLERANCE = 1e-9
# Relative tolerance on per-OD volumes in feasibility checks.
FEASIBILITY_TOLERANCE = 1e-9
