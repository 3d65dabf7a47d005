"""Finite-dimensional and K-theoretic invariants of quiver algebras.

For a finite acyclic quiver the algebra is a direct sum of matrix blocks,
one per vertex receiving no edge, of size equal to the number of directed
paths emanating from that vertex.  For arbitrary finite quivers the
K-groups come from the Smith normal form of the vertex matrix minus the
identity, restricted to regular columns.  Weights never enter: these
invariants depend only on the underlying multigraph.

Path convention: a path p = e1 e2 ... en has s(e_i) = r(e_{i+1}),
s(p) = s(en), r(p) = r(e1); the trivial path at v has s = r = v.
A cocycle extends to paths by kappa(p) = kappa(e1) * ... * kappa(en).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


class CStarError(ValueError):
    pass


def is_acyclic(q):
    """True iff the quiver has no directed cycle (Kahn's algorithm)."""
    indeg = {v: len(q.in_edges(v)) for v in q.vertices}
    queue = [v for v in q.vertices if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for e in q.out_edges(v):
            indeg[e.rng] -= 1
            if indeg[e.rng] == 0:
                queue.append(e.rng)
    return seen == len(q.vertices)


def regular_vertices(q):
    """Vertices receiving at least one edge, in input order."""
    return tuple(v for v in q.vertices if q.in_edges(v))


def vertex_matrix(q):
    """A[v][w] = number of edges from w to v, over the declared vertex order."""
    idx = {v: i for i, v in enumerate(q.vertices)}
    n = len(q.vertices)
    A = [[0] * n for _ in range(n)]
    for e in q.edges:
        A[idx[e.rng]][idx[e.src]] += 1
    return A


def paths_from(q, v):
    """All directed paths with source v, as tuples of edge ids (trivial = ()).

    Requires an acyclic quiver.  A path extends on the left: e * p is a path
    when s(e) = r(p).
    """
    out = [()]
    stack = [((), v)]
    while stack:
        p, r = stack.pop()
        for e in q.out_edges(r):
            ext = (e.id,) + p
            out.append(ext)
            stack.append((ext, e.rng))
    return out


def path_space(q):
    """Path lists per source vertex; finite only for acyclic quivers."""
    if not is_acyclic(q):
        raise CStarError("path space is infinite for cyclic quivers")
    return {v: paths_from(q, v) for v in q.vertices}


def path_range(q, p, source):
    return q.edge(p[0]).rng if p else source


@dataclass(frozen=True)
class BlockStructure:
    """Multiset of matrix block sizes of a finite-dimensional algebra."""

    blocks: tuple  # sorted positive ints

    @property
    def total_dimension(self):
        return sum(n * n for n in self.blocks)

    @staticmethod
    def of(sizes):
        return BlockStructure(tuple(sorted(sizes)))


@dataclass(frozen=True)
class KTheory:
    k0_invariant_factors: tuple  # each >= 2, divisibility chain
    k0_free_rank: int
    k1_rank: int


def acyclic_block_structure(q):
    """Block sizes of the algebra of a finite acyclic quiver.

    One block per non-regular vertex w, of size = number of paths with
    source w; the Cuntz-Krieger relation at regular vertices absorbs their
    projections into the blocks of the sources feeding them.
    """
    if not is_acyclic(q):
        raise CStarError("block structure requires an acyclic quiver")
    reg = set(regular_vertices(q))
    sizes = [len(paths_from(q, w)) for w in q.vertices if w not in reg]
    return BlockStructure.of(sizes)


def graded_dimensions(q, kappa):
    """Dimension of each group-degree component under the cocycle grading.

    The span of s_p s_q* for paths p, q with a common source contributes 1
    to degree kappa(p) * kappa(q)^{-1}.  Values sum to the algebra's total
    dimension.
    """
    if not is_acyclic(q):
        raise CStarError("graded dimensions require an acyclic quiver")
    G = kappa.group
    reg = set(regular_vertices(q))
    dims = Counter()

    def kpath(p):
        val = G.identity
        for eid in p:
            val = G.mul(val, kappa.value(eid))
        return val

    for w in q.vertices:
        if w in reg:
            continue
        degs = [kpath(p) for p in paths_from(q, w)]
        for dp in degs:
            for dq in degs:
                dims[G.mul(dp, G.inv(dq))] += 1
    return {g: dims.get(g, 0) for g in G.elements}


def coaction_crossed_product_blocks(q, kappa):
    """Predicted blocks of the coaction crossed product: each block of the
    base algebra repeated once per group element, without building the skew
    product."""
    base = acyclic_block_structure(q)
    n = kappa.group.order
    return BlockStructure.of([b for b in base.blocks for _ in range(n)])


def dual_crossed_product_blocks(q, kappa):
    """Predicted blocks of the skew product's algebra crossed by the dual
    translation action: the action permutes the |G| group sectors of each
    non-regular vertex freely and transitively, fusing them into one block
    of size N_w * |G| (the blocks of the base algebra tensored with M_|G|)."""
    base = acyclic_block_structure(q)
    n = kappa.group.order
    return BlockStructure.of([b * n for b in base.blocks])


@dataclass(frozen=True)
class SmithNormalForm:
    diagonal: tuple  # nonnegative, d1 | d2 | ...
    left: tuple      # U, unimodular, rows = rows of M
    right: tuple     # V, unimodular, cols = cols of M


def smith_normal_form(M):
    """Exact integer Smith normal form with unimodular witnesses U M V = D.

    Pivoting is deterministic: smallest-magnitude nonzero entry of the
    remaining submatrix, first position (row-major) on ties.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(map(int, row)) for row in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        # Locate the pivot.
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a and (pivot is None or abs(a) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        if A[t][t] < 0:
            negate_row(t)

        # Clear row and column t; new smaller residues restart the pass.
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    qt = A[i][t] // A[t][t]
                    add_row(i, t, -qt)
                    if A[i][t]:
                        swap_rows(t, i)
                        if A[t][t] < 0:
                            negate_row(t)
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    qt = A[t][j] // A[t][t]
                    add_col(j, t, -qt)
                    if A[t][j]:
                        swap_cols(t, j)
                        if A[t][t] < 0:
                            negate_row(t)
                        dirty = True
            if not dirty:
                # Enforce divisibility of the remaining submatrix: fold a
                # non-divisible column into the pivot column and re-clear,
                # which strictly shrinks the pivot.
                found = False
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % A[t][t]:
                            add_col(t, j, 1)
                            dirty = True
                            found = True
                            break
                    if found:
                        break
        t += 1

    diag = [A[i][i] for i in range(min(m, n))]
    return SmithNormalForm(tuple(diag), tuple(map(tuple, U)), tuple(map(tuple, V)))


def k_theory(q):
    """K0 (invariant factors and free rank) and K1 rank of the quiver algebra.

    Built from the map Z^R -> Z^V with column v in R given by
    M[w][v] = A[v][w] - delta_{v,w}; K0 is the cokernel, K1 the kernel.
    Convention is anchored by the 3-loop quiver, whose K0 must be Z/2.
    """
    A = vertex_matrix(q)
    idx = {v: i for i, v in enumerate(q.vertices)}
    reg = regular_vertices(q)
    n = len(q.vertices)
    M = [[0] * len(reg) for _ in range(n)]
    for c, v in enumerate(reg):
        for w in q.vertices:
            M[idx[w]][c] = A[idx[v]][idx[w]] - (1 if v == w else 0)
    if reg:
        snf = smith_normal_form(M)
        nonzero = [d for d in snf.diagonal if d != 0]
    else:
        nonzero = []
    rank = len(nonzero)
    return KTheory(
        k0_invariant_factors=tuple(d for d in nonzero if d >= 2),
        k0_free_rank=n - rank,
        k1_rank=len(reg) - rank,
    )
