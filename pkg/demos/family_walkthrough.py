"""Walk through the one-parameter family of two-generator complexes.

For each n we compute the full invariant report and print the resulting
piecewise-linear function together with its derived numbers.  The family
has a single breakpoint at t = 1/2 for every n, and the slice genus bound
it produces decreases toward 1 as n grows while its round-up stays 2."""

from gimel.fixtures import pretzel_2m37_fixture
from gimel.pipeline import compute_report

for n in range(3, 9):
    rep = compute_report(pretzel_2m37_fixture(n), name=f"family n={n}")
    pts = ", ".join(
        f"({t}, {rep.gimel(t)})" for t in rep.gimel.breakpoints
    )
    print(f"n = {n}")
    print(f"  gimel through {pts}")
    print(f"  slope at 0 = {rep.slope0}, value at 1 = {rep.value1}")
    print(f"  r = {rep.r}, u = {rep.u}, s = {rep.s_invariant}")
    print(f"  genus bound {rep.genus_bound} (rounded up: {rep.genus_bound_ceil})")
