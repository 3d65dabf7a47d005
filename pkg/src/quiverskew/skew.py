"""Skew products, quotients, weight descent/lift, and the finite
Gross-Tucker reconstruction.

The skew product of a quiver by a cocycle kappa places G-many copies of
each vertex and edge: src(e,g) = (s(e), g), rng(e,g) = (r(e), kappa(e)*g),
weight(e,g) = weight(e).  Right translation in the second coordinate is a
free action whose quotient recovers the original quiver, and every free
action arises this way once a section of the vertex orbits is chosen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import (
    Edge,
    FiniteQuiver,
    QuiverError,
    QuiverIso,
    QuiverMorphism,
    check_iso,
    check_morphism,
)
from .group import QuiverAction, is_free, orbits, validate_action


class SkewError(ValueError):
    pass


class SkewOrbitError(RuntimeError):
    """The canonical skew-orbit isomorphism failed to verify (a bug, not math)."""


@dataclass(frozen=True)
class Cocycle:
    """Total map from edge ids to group elements.  No identity imposed."""

    group: object  # FiniteGroup
    map: dict  # edge id -> element id

    def value(self, eid):
        try:
            return self.map[eid]
        except KeyError:
            raise SkewError(f"cocycle undefined on edge {eid!r}") from None


def skew_vertex_id(v, g):
    return f"{v}@{g}"


def skew_edge_id(eid, g):
    return f"{eid}@{g}"


def skew_product(q, kappa):
    """The skew product quiver q x_kappa G with canonical pair ids v@g, e@g."""
    G = kappa.group
    for e in q.edges:
        if kappa.value(e.id) not in set(G.elements):
            raise SkewError(f"cocycle value for edge {e.id!r} is not a group element")
    vertices = [skew_vertex_id(v, g) for v in q.vertices for g in G.elements]
    edges = []
    for e in q.edges:
        k = kappa.value(e.id)
        for g in G.elements:
            edges.append(Edge(
                skew_edge_id(e.id, g),
                skew_vertex_id(e.src, g),
                skew_vertex_id(e.rng, G.mul(k, g)),
                e.weight,
            ))
    return FiniteQuiver(vertices, edges)


def translation_action(q, kappa):
    """Right translation (x, h).g = (x, hg) on skew_product(q, kappa)."""
    G = kappa.group
    vperm = {}
    eperm = {}
    for g in G.elements:
        vperm[g] = {
            skew_vertex_id(v, h): skew_vertex_id(v, G.mul(h, g))
            for v in q.vertices for h in G.elements
        }
        eperm[g] = {
            skew_edge_id(e.id, h): skew_edge_id(e.id, G.mul(h, g))
            for e in q.edges for h in G.elements
        }
    return QuiverAction(G, vperm, eperm)


def quotient_quiver(q, a):
    """Orbit quiver and the projection morphism onto it.

    Requires a valid free action: freeness makes the per-vertex edge fiber
    map to the quotient fiber bijective, so the descended weight of an edge
    orbit is the weight of any representative.
    """
    bad = validate_action(q, a)
    if bad:
        raise SkewError(f"invalid action: {bad[0]}")
    if not is_free(q, a):
        raise SkewError("quotient requires a free action")
    v_orbits, e_orbits = orbits(q, a)
    v_rep = {}
    for orb in v_orbits:
        for v in orb:
            v_rep[v] = orb[0]
    e_rep = {}
    for orb in e_orbits:
        for eid in orb:
            e_rep[eid] = orb[0]
    edges = []
    for orb in e_orbits:
        rep = q.edge(orb[0])
        # Equivariance of the weights makes the descent well defined.
        assert all(q.edge(eid).weight == rep.weight for eid in orb)
        edges.append(Edge(orb[0], v_rep[rep.src], v_rep[rep.rng], rep.weight))
    quot = FiniteQuiver([orb[0] for orb in v_orbits], edges)
    proj = QuiverMorphism(v_rep, e_rep)
    assert check_morphism(q, quot, proj)
    return quot, proj


def descend_weights(q, a):
    """Quotient-edge weights of the orbit quiver, keyed by orbit representative."""
    quot, _ = quotient_quiver(q, a)
    return {e.id: e.weight for e in quot.edges}


def lift_system(quot, total, a, edge_orbit_map):
    """Pull quotient weights back along the orbit map.

    ``edge_orbit_map`` sends each edge of ``total`` to a quotient edge id;
    it must be constant on orbits and onto the quotient's edges, and the
    action must be free.  Returns the lifted weight assignment
    {edge id -> Fraction}; lifted weights are constant on orbits, hence
    equivariant, and descend back to the quotient weights exactly.
    """
    if not is_free(total, a):
        raise SkewError("lift requires a free action")
    quot_weights = {e.id: e.weight for e in quot.edges}
    _, e_orbits = orbits(total, a)
    for orb in e_orbits:
        targets = {edge_orbit_map[eid] for eid in orb}
        if len(targets) != 1:
            raise SkewError(f"orbit mismatch: orbit of {orb[0]!r} maps to {sorted(targets)}")
        if next(iter(targets)) not in quot_weights:
            raise SkewError(f"orbit mismatch: unknown quotient edge {next(iter(targets))!r}")
    covered = {edge_orbit_map[e.id] for e in total.edges}
    if covered != set(quot_weights):
        raise SkewError("orbit mismatch: quotient edges not covered by the orbit map")
    return {e.id: quot_weights[edge_orbit_map[e.id]] for e in total.edges}


@dataclass(frozen=True)
class Section:
    """Choice of one vertex per vertex orbit, keyed by orbit representative."""

    representative: dict  # quotient vertex id -> total vertex id


def default_section(q, a):
    """Least vertex id in each orbit (lexicographic)."""
    v_orbits, _ = orbits(q, a)
    return Section({orb[0]: min(orb) for orb in v_orbits})


@dataclass(frozen=True)
class GrossTuckerWitness:
    quotient: FiniteQuiver
    cocycle: Cocycle
    phi: dict    # vertex -> (quotient vertex, group element)
    sigma: dict  # edge id -> (quotient edge id, group element)
    iso: QuiverIso  # q -> skew_product(quotient, cocycle), in pair-id form


def _witness_iso(q, skew, phi, sigma):
    vmap = {v: skew_vertex_id(*phi[v]) for v in q.vertices}
    emap = {e.id: skew_edge_id(*sigma[e.id]) for e in q.edges}
    forward = QuiverMorphism(vmap, emap)
    backward = QuiverMorphism(
        {w: v for v, w in vmap.items()},
        {f: e for e, f in emap.items()},
    )
    return QuiverIso(forward, backward)


def gross_tucker_reconstruct(q, a, section=None):
    """Exhibit a free action as a skew product of its quotient.

    For each vertex v, g_v is the unique group element moving the chosen
    section point of v's orbit to v; phi(v) = (orbit(v), g_v) and
    sigma(e) = (orbit(e), g_{src(e)}).  The recovered cocycle value on an
    edge orbit is g_{rng(e0)} for the unique representative e0 whose source
    lies on the section.  The returned witness is verified exhaustively.
    """
    bad = validate_action(q, a)
    if bad:
        raise SkewError(f"invalid action: {bad[0]}")
    if not is_free(q, a):
        raise SkewError("reconstruction requires a free action")
    G = a.group
    quot, proj = quotient_quiver(q, a)
    if section is None:
        section = default_section(q, a)
    rep = section.representative
    if set(rep) != set(quot.vertices):
        raise SkewError("section does not cover exactly the vertex orbits")
    for o, v in rep.items():
        if proj.vmap.get(v) != o:
            raise SkewError(f"section point {v!r} is not in orbit {o!r}")

    # g_v: the unique translator from the section point to v (freeness).
    g_of = {}
    for v in q.vertices:
        base = rep[proj.vmap[v]]
        hits = [g for g in G.elements if a.act_v(base, g) == v]
        assert len(hits) == 1
        g_of[v] = hits[0]

    phi = {v: (proj.vmap[v], g_of[v]) for v in q.vertices}
    sigma = {e.id: (proj.emap[e.id], g_of[e.src]) for e in q.edges}

    kmap = {}
    for e in q.edges:
        e0 = a.act_e(e.id, G.inv(g_of[e.src]))
        kmap[proj.emap[e.id]] = g_of[q.edge(e0).rng]
    kappa = Cocycle(G, kmap)

    skew = skew_product(quot, kappa)
    iso = _witness_iso(q, skew, phi, sigma)
    if not check_iso(q, skew, iso):
        raise SkewOrbitError("reconstructed witness failed isomorphism verification")
    # G-equivariance of the trivializations.
    for g in G.elements:
        for v in q.vertices:
            o, h = phi[v]
            if phi[a.act_v(v, g)] != (o, G.mul(h, g)):
                raise SkewOrbitError("phi is not G-equivariant")
        for e in q.edges:
            o, h = sigma[e.id]
            if sigma[a.act_e(e.id, g)] != (o, G.mul(h, g)):
                raise SkewOrbitError("sigma is not G-equivariant")
    return GrossTuckerWitness(quot, kappa, phi, sigma, iso)


def check_skew_orbit(q, kappa):
    """Verify quotient(skew_product(q, kappa)) ~ q via first-factor projection.

    Returns the verified QuiverIso from the quotient onto q.  A failure
    here raises SkewOrbitError: it indicates an implementation bug.
    """
    G = kappa.group
    skew = skew_product(q, kappa)
    act = translation_action(q, kappa)
    quot, _ = quotient_quiver(skew, act)

    # Each orbit representative is some (x, g); its first factor is the
    # canonical image.  Recover it from the construction, not by string
    # parsing, since vertex ids are opaque.
    v_first = {}
    for v in q.vertices:
        for g in G.elements:
            v_first[skew_vertex_id(v, g)] = v
    e_first = {}
    for e in q.edges:
        for g in G.elements:
            e_first[skew_edge_id(e.id, g)] = e.id

    vmap = {o: v_first[o] for o in quot.vertices}
    emap = {e.id: e_first[e.id] for e in quot.edges}
    forward = QuiverMorphism(vmap, emap)
    backward = QuiverMorphism(
        {v: o for o, v in vmap.items()},
        {f: o for o, f in emap.items()},
    )
    iso = QuiverIso(forward, backward)
    ok = (
        len(quot.vertices) == len(q.vertices)
        and len(quot.edges) == len(q.edges)
        and len(set(vmap.values())) == len(vmap)
        and len(set(emap.values())) == len(emap)
        and check_iso(quot, q, iso)
    )
    if not ok:
        raise SkewOrbitError("canonical skew-orbit isomorphism failed to verify")
    return iso
