"""The verification harness and what a caught fault looks like."""
from boundedhc.verify import SUITES, corrupt_coefficient, run_suite

for name in SUITES:
    print(run_suite(name).line())

# Add 1 to one coefficient of one produced series and watch the suite point at it.
hook = corrupt_coefficient({"a2": 7, "b2": -3, "s": 1}, 17)
print(run_suite("sp4-principal-coefficients", {"a2_max": 9, "order": 60}, fault=hook).line())
