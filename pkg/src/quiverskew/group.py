"""Finite groups by Cayley table, and their actions on quivers.

Actions are right actions stored as full per-element permutation tables:
``v . (g*h) == (v . g) . h``.  Every group in scope has order <= 120, so
exhaustive validation loops are cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GroupError(ValueError):
    pass


class FiniteGroup:
    def __init__(self, elements, table, identity):
        self.elements = tuple(elements)
        self.table = {g: dict(row) for g, row in table.items()}
        self.identity = identity
        self._inv = {}
        for g in self.elements:
            for h in self.elements:
                if self.table[g][h] == identity:
                    self._inv[g] = h

    def mul(self, g, h):
        return self.table[g][h]

    def inv(self, g):
        return self._inv[g]

    @property
    def order(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def validate_group(g):
    """Exhaustive check of the group axioms; returns violation strings."""
    report = []
    els = g.elements
    eset = set(els)
    if len(eset) != len(els):
        report.append("duplicate element ids")
    if g.identity not in eset:
        report.append("identity not among elements")
        return report
    for a in els:
        row = g.table.get(a)
        if row is None or set(row) != eset:
            report.append(f"table row for {a!r} is not total")
            return report
        if set(row.values()) != eset:
            report.append(f"table row for {a!r} is not a permutation")
        if g.table[g.identity][a] != a or g.table[a][g.identity] != a:
            report.append(f"identity law fails at {a!r}")
    cols = {b: {g.table[a][b] for a in els} for b in els}
    for b in els:
        if cols[b] != eset:
            report.append(f"table column for {b!r} is not a permutation")
    for a in els:
        for b in els:
            for c in els:
                if g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]:
                    report.append(f"associativity fails at ({a!r},{b!r},{c!r})")
                    return report
    for a in els:
        if not any(g.table[a][b] == g.identity for b in els):
            report.append(f"no inverse for {a!r}")
    return report


def make_cyclic(n):
    """Cyclic group Z/n with elements "0".."n-1" under addition."""
    if n < 1:
        raise GroupError("cyclic group order must be >= 1")
    els = [str(i) for i in range(n)]
    table = {
        str(i): {str(j): str((i + j) % n) for j in range(n)} for i in range(n)
    }
    return FiniteGroup(els, table, "0")


def make_symmetric(n):
    """Symmetric group S_n (n <= 5) as one-line permutation words.

    Element "231" is the map 1->2, 2->3, 3->1; composition is
    "apply left, then right", matching the right-action convention.
    """
    if not 1 <= n <= 5:
        raise GroupError("symmetric group supported for 1 <= n <= 5")
    perms = sorted(itertools.permutations(range(n)))
    name = {p: "".join(str(i + 1) for i in p) for p in perms}
    table = {}
    for p in perms:
        row = {}
        for q in perms:
            comp = tuple(q[p[i]] for i in range(n))
            row[name[q]] = name[comp]
        table[name[p]] = row
    identity = name[tuple(range(n))]
    return FiniteGroup([name[p] for p in perms], table, identity)


@dataclass(frozen=True)
class QuiverAction:
    """Right action of a finite group on a quiver, as permutation tables."""

    group: FiniteGroup
    vperm: dict  # element -> {vertex -> vertex}
    eperm: dict  # element -> {edge id -> edge id}

    def act_v(self, v, g):
        return self.vperm[g][v]

    def act_e(self, eid, g):
        return self.eperm[g][eid]


def trivial_action(q, group):
    idv = {v: v for v in q.vertices}
    ide = {e.id: e.id for e in q.edges}
    return QuiverAction(group, {g: dict(idv) for g in group.elements},
                        {g: dict(ide) for g in group.elements})


def validate_action(q, a):
    """Check homomorphism, src/rng commuting, and exact weight equivariance."""
    report = []
    G = a.group
    for g in G.elements:
        vp = a.vperm.get(g)
        ep = a.eperm.get(g)
        if vp is None or set(vp) != set(q.vertices) or set(vp.values()) != set(q.vertices):
            report.append(f"vertex permutation for {g!r} is not a permutation of the vertices")
            return report
        if ep is None or set(ep) != {e.id for e in q.edges} or set(ep.values()) != {e.id for e in q.edges}:
            report.append(f"edge permutation for {g!r} is not a permutation of the edges")
            return report
    idg = G.identity
    if any(a.vperm[idg][v] != v for v in q.vertices) or any(
        a.eperm[idg][e.id] != e.id for e in q.edges
    ):
        report.append("identity element does not act as the identity")
    for g in G.elements:
        for h in G.elements:
            gh = G.mul(g, h)
            for v in q.vertices:
                if a.vperm[gh][v] != a.vperm[h][a.vperm[g][v]]:
                    report.append(f"vertex homomorphism law fails at ({g!r},{h!r})")
                    break
            else:
                for e in q.edges:
                    if a.eperm[gh][e.id] != a.eperm[h][a.eperm[g][e.id]]:
                        report.append(f"edge homomorphism law fails at ({g!r},{h!r})")
                        break
                continue
            break
    for g in G.elements:
        for e in q.edges:
            img = q.edge(a.eperm[g][e.id])
            if img.src != a.vperm[g][e.src]:
                report.append(f"source commuting fails for edge {e.id!r} under {g!r}")
            if img.rng != a.vperm[g][e.rng]:
                report.append(f"range commuting fails for edge {e.id!r} under {g!r}")
            if img.weight != e.weight:
                report.append(f"weight equivariance fails for edge {e.id!r} under {g!r}")
    return report


def is_free(q, a):
    """True iff no non-identity element fixes a vertex."""
    G = a.group
    for g in G.elements:
        if g == G.identity:
            continue
        if any(a.vperm[g][v] == v for v in q.vertices):
            return False
    return True


def edge_free(q, a):
    """Freeness on edges; implied by vertex freeness, asserted as a property."""
    G = a.group
    for g in G.elements:
        if g == G.identity:
            continue
        if any(a.eperm[g][e.id] == e.id for e in q.edges):
            return False
    return True


def orbits(q, a):
    """G-orbit partitions of vertices and edges.

    Each orbit is a tuple sorted by input order with the canonical
    representative (least in input order) first; orbits are listed by their
    representative's input position.
    """
    G = a.group
    vpos = {v: i for i, v in enumerate(q.vertices)}
    epos = {e.id: i for i, e in enumerate(q.edges)}

    def partition(items, act, pos):
        seen = set()
        parts = []
        for x in items:
            if x in seen:
                continue
            orb = {act(x, g) for g in G.elements}
            seen |= orb
            parts.append(tuple(sorted(orb, key=pos.__getitem__)))
        return parts

    v_orbits = partition(q.vertices, a.act_v, vpos)
    e_orbits = partition([e.id for e in q.edges], a.act_e, epos)
    return v_orbits, e_orbits
