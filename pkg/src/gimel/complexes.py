"""Cochain complexes of graded free modules over an equivariant or
specialized ring context.

Grading convention (used everywhere downstream): a generator labeled q^s
sits at absolute quantum degree s + (1 - n); the monomial x^a on it at
s + (1 - n) + 2a.  Differential matrices are stored row-per-target,
column-per-source.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ContextMismatchError, MalformedInputError
from .ring import (
    EQUIVARIANT,
    SPECIALIZED,
    Poly,
    Rational,
    RingCtx,
    equivariant_ctx,
    evaluate_poly,
    quantum_degree,
    specialized_ctx,
    zero,
)

Matrix = Tuple[Tuple[Poly, ...], ...]


@dataclass(frozen=True)
class GradedFreeComplex:
    """Finite complex of graded free modules.

    ``modules`` maps homological degree to the tuple of generator q-labels;
    ``diffs`` maps degree i to the matrix of d^i : C^i -> C^{i+1}
    (shape rank(i+1) x rank(i)).  Degrees with no generators are absent.
    """

    ctx: RingCtx
    modules: Tuple[Tuple[int, Tuple[int, ...]], ...]
    diffs: Tuple[Tuple[int, Matrix], ...]

    @staticmethod
    def build(
        ctx: RingCtx,
        modules: Dict[int, Sequence[int]],
        diffs: Dict[int, Sequence[Sequence[Poly]]],
    ) -> "GradedFreeComplex":
        mods = tuple(
            (i, tuple(int(s) for s in labels))
            for i, labels in sorted(modules.items())
            if len(labels) > 0
        )
        mdict = dict(mods)
        cleaned = {}
        for i, mat in sorted(diffs.items()):
            rows = len(mat)
            cols = len(mat[0]) if rows else 0
            src = len(mdict.get(i, ()))
            tgt = len(mdict.get(i + 1, ()))
            if src == 0 or tgt == 0:
                if any(not e.is_zero() for row in mat for e in row):
                    raise MalformedInputError(f"differential at degree {i} has no home")
                continue
            if (rows, cols) != (tgt, src):
                raise MalformedInputError(
                    f"differential at degree {i}: shape {(rows, cols)}, "
                    f"expected {(tgt, src)}"
                )
            if any(e.ctx != ctx for row in mat for e in row):
                raise ContextMismatchError("matrix entry in a different ring context")
            cleaned[i] = tuple(tuple(row) for row in mat)
        return GradedFreeComplex(ctx, mods, tuple(sorted(cleaned.items())))

    # -- accessors ---------------------------------------------------------

    def degrees(self) -> List[int]:
        return [i for i, _ in self.modules]

    def labels(self, i: int) -> Tuple[int, ...]:
        for d, labs in self.modules:
            if d == i:
                return labs
        return ()

    def rank(self, i: int) -> int:
        return len(self.labels(i))

    def diff(self, i: int) -> List[List[Poly]]:
        """d^i as list-of-rows; zero matrix if absent."""
        for d, mat in self.diffs:
            if d == i:
                return [list(row) for row in mat]
        z = zero(self.ctx)
        return [[z] * self.rank(i) for _ in range(self.rank(i + 1))]

    def absolute_degree(self, label: int) -> int:
        return label + 1 - self.ctx.n


@dataclass(frozen=True)
class ComplexReport:
    ranks: Tuple[Tuple[int, int], ...]
    euler: int
    ok: bool
    failures: Tuple[str, ...]


def validate(c: GradedFreeComplex) -> ComplexReport:
    """Check d^2 = 0 and the grading condition on every entry.

    Equivariant entries must be homogeneous of degree q_src - q_tgt;
    specialized entries must have filtration level <= q_src - q_tgt.
    Failures are reported, not raised.
    """
    failures: List[str] = []
    n = c.ctx.n

    for i in c.degrees():
        src = c.labels(i)
        tgt = c.labels(i + 1)
        if not tgt:
            continue
        mat = c.diff(i)
        for col, s in enumerate(src):
            for row, t in enumerate(tgt):
                e = mat[row][col]
                if e.is_zero():
                    continue
                want = (s + 1 - n) - (t + 1 - n)
                got = quantum_degree(e)
                if c.ctx.kind == EQUIVARIANT:
                    if got != want:
                        failures.append(
                            f"degree {i} entry ({row},{col}): quantum degree "
                            f"{got}, expected {want}"
                        )
                        break
                else:
                    if got > want:
                        failures.append(
                            f"degree {i} entry ({row},{col}): filtration level "
                            f"{got} exceeds {want}"
                        )
                        break
            else:
                continue
            break

    for i in c.degrees():
        if c.rank(i + 1) == 0 or c.rank(i + 2) == 0:
            continue
        d0 = c.diff(i)
        d1 = c.diff(i + 1)
        for row in range(c.rank(i + 2)):
            for col in range(c.rank(i)):
                acc = zero(c.ctx)
                for k in range(c.rank(i + 1)):
                    acc = acc + d1[row][k] * d0[k][col]
                if not acc.is_zero():
                    failures.append(f"d^2 != 0 at degree {i}, entry ({row},{col})")
                    break
            else:
                continue
            break

    ranks = tuple((i, c.rank(i)) for i in c.degrees())
    return ComplexReport(ranks, euler(c), not failures, tuple(failures))


def euler(c: GradedFreeComplex) -> int:
    return sum((-1 if i % 2 else 1) * c.rank(i) for i in c.degrees())


def shift(c: GradedFreeComplex, dt: int, dq: int) -> GradedFreeComplex:
    """Shift homological degrees by dt and all q-labels by dq."""
    mods = {i + dt: [s + dq for s in labs] for i, labs in c.modules}
    diffs = {i + dt: c.diff(i) for i, _ in c.diffs}
    return GradedFreeComplex.build(c.ctx, mods, diffs)


def tensor(c1: GradedFreeComplex, c2: GradedFreeComplex) -> GradedFreeComplex:
    """Tensor product complex with Koszul signs:
    d(g (x) h) = d(g) (x) h + (-1)^{|g|} g (x) d(h).
    Generator q-labels add (each label carries the q^{1-n} background once)."""
    if c1.ctx != c2.ctx:
        raise ContextMismatchError("tensor operands live in different contexts")
    ctx = c1.ctx

    # generator list per total degree: (i1, a, i2, b), ordered
    gens: Dict[int, List[Tuple[int, int, int, int]]] = {}
    for i1, labs1 in c1.modules:
        for i2, labs2 in c2.modules:
            bucket = gens.setdefault(i1 + i2, [])
            for a in range(len(labs1)):
                for b in range(len(labs2)):
                    bucket.append((i1, a, i2, b))
    for bucket in gens.values():
        bucket.sort()

    index = {
        deg: {g: k for k, g in enumerate(bucket)} for deg, bucket in gens.items()
    }
    mods = {
        deg: [c1.labels(i1)[a] + c2.labels(i2)[b] for (i1, a, i2, b) in bucket]
        for deg, bucket in gens.items()
    }

    z = zero(ctx)
    diffs: Dict[int, List[List[Poly]]] = {}
    for deg, bucket in sorted(gens.items()):
        if deg + 1 not in gens:
            continue
        tgt = gens[deg + 1]
        mat = [[z] * len(bucket) for _ in range(len(tgt))]
        for col, (i1, a, i2, b) in enumerate(bucket):
            d1 = c1.diff(i1)
            for ta in range(c1.rank(i1 + 1)):
                e = d1[ta][a]
                if not e.is_zero():
                    row = index[deg + 1][(i1 + 1, ta, i2, b)]
                    mat[row][col] = mat[row][col] + e
            d2 = c2.diff(i2)
            sign = -1 if i1 % 2 else 1
            for tb in range(c2.rank(i2 + 1)):
                e = d2[tb][b]
                if not e.is_zero():
                    row = index[deg + 1][(i1, a, i2 + 1, tb)]
                    mat[row][col] = mat[row][col] + sign * e
        diffs[deg] = mat
    return GradedFreeComplex.build(ctx, mods, diffs)


def dual(c: GradedFreeComplex) -> GradedFreeComplex:
    """Dual complex: homological degree i -> -i, differentials transposed,
    label s -> -s.  (The free module q^s R spans absolute degrees
    [s+1-n, s+n-1]; negating that range puts the dual generator at
    -s+1-n, which is the label -s.)"""
    mods = {-i: [-s for s in labs] for i, labs in c.modules}
    diffs: Dict[int, List[List[Poly]]] = {}
    for i, _ in c.diffs:
        mat = c.diff(i)  # rank(i+1) x rank(i)
        diffs[-i - 1] = [list(row) for row in zip(*mat)]
    return GradedFreeComplex.build(c.ctx, mods, diffs)


def evaluate(c: GradedFreeComplex, potential: Iterable[Rational]) -> GradedFreeComplex:
    """Entrywise specialization of an equivariant complex at a monic
    potential (a_i -> coefficient of x^i, then reduction mod dw)."""
    if c.ctx.kind != EQUIVARIANT:
        raise ContextMismatchError("evaluate needs an equivariant complex")
    pot = tuple(Fraction(v) for v in potential)
    mods = {i: list(labs) for i, labs in c.modules}
    diffs = {
        i: [[evaluate_poly(e, pot) for e in row] for row in c.diff(i)]
        for i, _ in c.diffs
    }
    return GradedFreeComplex.build(specialized_ctx(c.ctx.n, pot), mods, diffs)


def block_sum(c1: GradedFreeComplex, c2: GradedFreeComplex) -> GradedFreeComplex:
    """Direct sum, c1's generators listed first in every degree."""
    if c1.ctx != c2.ctx:
        raise ContextMismatchError("block_sum operands live in different contexts")
    z = zero(c1.ctx)
    mods: Dict[int, List[int]] = {}
    for i in set(c1.degrees()) | set(c2.degrees()):
        mods[i] = list(c1.labels(i)) + list(c2.labels(i))
    diffs: Dict[int, List[List[Poly]]] = {}
    for i in sorted(mods):
        src1, src2 = c1.rank(i), c2.rank(i)
        tgt1, tgt2 = c1.rank(i + 1), c2.rank(i + 1)
        if (tgt1 + tgt2) == 0 or (src1 + src2) == 0:
            continue
        d1 = c1.diff(i)
        d2 = c2.diff(i)
        mat = []
        for r in range(tgt1):
            mat.append(list(d1[r]) + [z] * src2)
        for r in range(tgt2):
            mat.append([z] * src1 + list(d2[r]))
        diffs[i] = mat
    return GradedFreeComplex.build(c1.ctx, mods, diffs)


def rank_one_complex(ctx: RingCtx, label: int = 0, degree: int = 0) -> GradedFreeComplex:
    return GradedFreeComplex.build(ctx, {degree: [label]}, {})
