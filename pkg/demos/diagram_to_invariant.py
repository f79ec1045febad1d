"""From a planar diagram code to the concordance invariant, end to end.

The n = 2 pipeline builds the equivariant cube of resolutions directly
from the PD code, simplifies it, specializes, and sweeps the filtration
parameter.  The trefoil and its mirror come out as -t and +t; the figure
eight knot, both kinked unknots, and the round unknot are all zero."""

from gimel.cube import format_pd, mirror, parse_pd
from gimel.pipeline import compute_report_pd

DIAGRAMS = {
    "unknot": "PD[]",
    "negative kink": "PD[X[1,1,2,2]]",
    "right trefoil": "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]",
    "figure eight": "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]",
}

for name, pd in DIAGRAMS.items():
    rep = compute_report_pd(pd, name=name)
    print(f"{name:15s} gimel(t) = {rep.value1} * t   (u = {rep.u}, s = {rep.s_invariant})")

left = format_pd(mirror(parse_pd(DIAGRAMS["right trefoil"])))
rep = compute_report_pd(left, name="left trefoil")
print(f"{'left trefoil':15s} gimel(t) = {rep.value1} * t   (u = {rep.u}, s = {rep.s_invariant})")
