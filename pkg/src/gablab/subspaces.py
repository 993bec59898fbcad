"""Canonical enumeration of F_q-subspaces of a spanned ambient space.

Every t-dimensional subspace of an n-dimensional F_q-space has exactly one
reduced-row-echelon coefficient matrix, so enumerating those matrices
yields each subspace once, in a reproducible order: pivot-column tuples
ascend lexicographically, and for a fixed pivot tuple the free entries run
through F_q (ascending element code) as an odometer whose last listed cell
varies fastest.  Free cells are listed row-major.
"""

from __future__ import annotations

import itertools

from .field import FieldElement
from .linpoly import SubspaceBasis


def gaussian_binomial(n: int, t: int, q: int) -> int:
    """Number of t-dimensional subspaces of an n-dimensional F_q-space."""
    if t < 0 or t > n:
        return 0
    num = den = 1
    for i in range(t):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_bases(ambient: SubspaceBasis, t: int, cap: int | None = None):
    """Yield each t-dim subspace of span(ambient) once, canonical order."""
    if not isinstance(ambient, SubspaceBasis):
        raise TypeError("ambient space must be a SubspaceBasis")
    ctx = ambient.ctx
    n = ambient.dim
    if t < 0 or t > n:
        raise ValueError(f"subspace dimension must lie in 0..{n}")
    count = gaussian_binomial(n, t, ctx.q)
    if cap is not None and count > cap:
        raise ValueError(
            f"{count} candidate subspaces exceed the cap {cap}; raise the cap to proceed")
    if t == 0:
        yield SubspaceBasis(ctx, ())
        return
    scalars = [e.code for e in ctx.subfield_elements()]
    gcodes = [g.code for g in ambient.gens]
    for pivots in itertools.combinations(range(n), t):
        pivot_set = set(pivots)
        free_cells = [(i, j)
                      for i in range(t)
                      for j in range(pivots[i] + 1, n)
                      if j not in pivot_set]
        for assign in itertools.product(range(ctx.q), repeat=len(free_cells)):
            rows = [[0] * n for _ in range(t)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), v in zip(free_cells, assign):
                rows[i][j] = scalars[v]
            gens = []
            for row in rows:
                acc = 0
                for c, g in zip(row, gcodes):
                    if c:
                        acc = ctx.add(acc, ctx.mul(c, g))
                gens.append(FieldElement(ctx, acc))
            yield SubspaceBasis(ctx, gens)
