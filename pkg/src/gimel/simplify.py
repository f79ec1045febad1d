"""Homotopy-equivalence simplification and direct-sum decomposition.

Gaussian elimination cancels differential entries that are nonzero rational
constants (a deliberately conservative notion of unit: it is grading-safe in
both ring kinds).  Decomposition into summands is the connected-component
heuristic on the generator graph; the odd-Euler-characteristic summand is
the equivariant Rasmussen summand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .complexes import GradedFreeComplex, euler, evaluate
from .errors import DecompositionError, InvalidRootError
from .ring import EQUIVARIANT, Poly, Rational, zero


def _unit_value(p: Poly) -> Optional[Fraction]:
    """The value of p if it is a nonzero rational constant, else None."""
    if len(p.terms) != 1:
        return None
    exps, coeff = p.terms[0]
    if any(exps):
        return None
    return coeff


def gauss_simplify(c: GradedFreeComplex) -> GradedFreeComplex:
    """Cancel invertible-constant entries until none remain.

    The result is homotopy equivalent to the input (it differs only by
    acyclic summands).  Pivot choice: among unit entries, minimize
    (row nonzeros - 1) * (column nonzeros - 1), ties broken by smallest
    (degree, row, column), which makes the output deterministic.
    """
    alive: Dict[int, List[bool]] = {i: [True] * c.rank(i) for i in c.degrees()}
    mats: Dict[int, Dict[Tuple[int, int], Poly]] = {}
    for i, _ in c.diffs:
        d = c.diff(i)
        mats[i] = {
            (r, col): e
            for r, row in enumerate(d)
            for col, e in enumerate(row)
            if not e.is_zero()
        }

    def entry(i: int, r: int, col: int) -> Poly:
        return mats.get(i, {}).get((r, col), zero(c.ctx))

    while True:
        best = None
        for i in sorted(mats):
            mat = mats[i]
            if not mat:
                continue
            row_nnz: Dict[int, int] = {}
            col_nnz: Dict[int, int] = {}
            for (r, col) in mat:
                row_nnz[r] = row_nnz.get(r, 0) + 1
                col_nnz[col] = col_nnz.get(col, 0) + 1
            for (r, col) in sorted(mat):
                u = _unit_value(mat[(r, col)])
                if u is None:
                    continue
                cost = (row_nnz[r] - 1) * (col_nnz[col] - 1)
                key = (cost, i, r, col)
                if best is None or key < best[0]:
                    best = (key, i, r, col, u)
        if best is None:
            break
        _, i, r0, c0, u = best

        mat = mats[i]
        beta = {col: e for (r, col), e in mat.items() if r == r0 and col != c0}
        gamma = {r: e for (r, col), e in mat.items() if col == c0 and r != r0}
        for r, ge in gamma.items():
            for col, be in beta.items():
                new = entry(i, r, col) - ge * (Fraction(1, 1) / u) * be
                if new.is_zero():
                    mat.pop((r, col), None)
                else:
                    mat[(r, col)] = new
        for key in [k for k in mat if k[0] == r0 or k[1] == c0]:
            mat.pop(key)
        if i - 1 in mats:
            for key in [k for k in mats[i - 1] if k[0] == c0]:
                mats[i - 1].pop(key)
        if i + 1 in mats:
            for key in [k for k in mats[i + 1] if k[1] == r0]:
                mats[i + 1].pop(key)
        alive[i][c0] = False
        alive[i + 1][r0] = False

    keep = {i: [k for k, a in enumerate(alive[i]) if a] for i in alive}
    new_index = {
        i: {old: new for new, old in enumerate(keep[i])} for i in keep
    }
    mods = {i: [c.labels(i)[k] for k in keep[i]] for i in keep}
    z = zero(c.ctx)
    diffs: Dict[int, List[List[Poly]]] = {}
    for i, mat in mats.items():
        rows, cols = len(keep.get(i + 1, [])), len(keep.get(i, []))
        if rows == 0 or cols == 0:
            continue
        m = [[z] * cols for _ in range(rows)]
        for (r, col), e in mat.items():
            m[new_index[i + 1][r]][new_index[i][col]] = e
        diffs[i] = m
    return GradedFreeComplex.build(c.ctx, mods, diffs)


@dataclass(frozen=True)
class Decomposition:
    """Connected-component splitting of a complex.  ``provenance`` lists,
    per summand, the (degree, index) pairs of input generators it keeps."""

    summands: Tuple[GradedFreeComplex, ...]
    provenance: Tuple[Tuple[Tuple[int, int], ...], ...]


def split_components(c: GradedFreeComplex) -> Decomposition:
    """Partition generators into connected components of the graph whose
    edges are nonzero differential entries."""
    nodes = [(i, k) for i in c.degrees() for k in range(c.rank(i))]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for i, _ in c.diffs:
        mat = c.diff(i)
        for r in range(c.rank(i + 1)):
            for col in range(c.rank(i)):
                if not mat[r][col].is_zero():
                    union((i, col), (i + 1, r))

    groups: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for v in nodes:
        groups.setdefault(find(v), []).append(v)

    summands = []
    provenance = []
    for root in sorted(groups):
        members = sorted(groups[root])
        idx = {
            i: [k for (d, k) in members if d == i] for i in c.degrees()
        }
        mods = {i: [c.labels(i)[k] for k in idx[i]] for i in idx if idx[i]}
        diffs = {}
        for i, _ in c.diffs:
            src, tgt = idx.get(i, []), idx.get(i + 1, [])
            if not src or not tgt:
                continue
            full = c.diff(i)
            diffs[i] = [[full[r][col] for col in src] for r in tgt]
        summands.append(GradedFreeComplex.build(c.ctx, mods, diffs))
        provenance.append(tuple(members))
    return Decomposition(tuple(summands), tuple(provenance))


def extract_sn(dec: Decomposition) -> GradedFreeComplex:
    """The unique summand of odd Euler characteristic; it must have
    characteristic 1 and all others 0, as for a knot's complex."""
    odd = [s for s in dec.summands if euler(s) % 2 != 0]
    if len(odd) != 1:
        raise DecompositionError(
            f"expected exactly one odd-Euler-characteristic summand, found {len(odd)}"
        )
    if euler(odd[0]) != 1:
        raise DecompositionError(
            f"distinguished summand has Euler characteristic {euler(odd[0])}, expected 1"
        )
    if any(euler(s) != 0 for s in dec.summands if s is not odd[0]):
        raise DecompositionError("a non-distinguished summand has nonzero Euler characteristic")
    return odd[0]


def _check_simple_root(potential: Tuple[Fraction, ...], alpha: Fraction) -> None:
    n = len(potential)
    value = alpha**n + sum(potential[i] * alpha**i for i in range(n))
    deriv = n * alpha ** (n - 1) + sum(
        i * potential[i] * alpha ** (i - 1) for i in range(1, n)
    )
    if value != 0:
        raise InvalidRootError(f"{alpha} is not a root of the potential")
    if deriv == 0:
        raise InvalidRootError(f"{alpha} is a multiple root of the potential")


def reduced_complex(
    s: GradedFreeComplex,
    potential: Iterable[Rational],
    alpha: Rational,
):
    """Image subcomplex of multiplication by dw(x)/(x - alpha).

    Since x acts as alpha on that image, each free generator contributes a
    single basis vector p_alpha * g, and the differential is the original
    one with x evaluated at alpha.  The quantum grading is shifted by 1 - n
    on top of the multiplication's degree 2(n - 1), leaving each basis
    vector at quantum degree equal to its generator's q-label.

    Returns a ScalarComplex (the image is a complex of Q-vector spaces, not
    of free modules over the ring context).
    """
    from .filtration import Monomial, ScalarComplex

    pot = tuple(Fraction(v) for v in potential)
    alpha = Fraction(alpha)
    _check_simple_root(pot, alpha)
    if s.ctx.kind == EQUIVARIANT:
        s = evaluate(s, pot)
    n = s.ctx.n

    basis = {}
    for i in s.degrees():
        basis[i] = [
            Monomial(g, 0, label + (n - 1) + (1 - n), 0)
            for g, label in enumerate(s.labels(i))
        ]
    mats = {}
    for i, _ in s.diffs:
        mat = s.diff(i)
        mats[i] = [
            [
                sum(
                    (coeff * alpha ** exps[0] for exps, coeff in e.terms),
                    Fraction(0),
                )
                for e in row
            ]
            for row in mat
        ]
    return ScalarComplex(
        n=n,
        potential=pot,
        basis={i: tuple(b) for i, b in basis.items()},
        mats={i: tuple(tuple(row) for row in m) for i, m in mats.items()},
    )
