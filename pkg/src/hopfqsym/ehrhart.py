"""Lattice-point enumeration for relative composition complexes.

Each composition C in delta-minus-gamma names an open cone (coordinates
constant on blocks, strictly increasing across blocks); the generating
function of the positive lattice points in those cones is a quasisymmetric
function.  Everything here is decided combinatorially, by comparing induced
compositions under refinement, never by floating-point geometry.
"""

from __future__ import annotations

import itertools

from .combinat import GroundSet, induced_composition, refines
from .qseries import LaurentPoly
from .qsym import QSym


def ehrhart_qsym(x):
    """Sum of M_type(C) over the compositions of delta-minus-gamma."""
    acc = {}
    for comp in x.relative():
        t = comp.type()
        acc[t] = acc.get(t, 0) + 1
    return QSym(acc)


def _classify(ground, rel, values):
    point = dict(zip(ground.labels, values))
    return induced_composition(ground, point) in rel


def lattice_count_box(x, n, weighted=False):
    """Count the points of {1..n+1}^I (a translate of the [0,n] box) lying in
    the cones; the weighted variant accumulates q^(sum (a_i - 1))."""
    ground = GroundSet(x.ground)
    rel = x.relative()
    if not weighted:
        total = 0
        for values in itertools.product(range(1, n + 2), repeat=ground.size):
            if _classify(ground, rel, values):
                total += 1
        return total
    acc = {}
    for values in itertools.product(range(1, n + 2), repeat=ground.size):
        if _classify(ground, rel, values):
            w = sum(values) - ground.size
            acc[w] = acc.get(w, 0) + 1
    return LaurentPoly(acc)


def _positive_points_with_sum(size, total):
    if size == 0:
        if total == 0:
            yield ()
        return
    for head in range(1, total - size + 2):
        for tail in _positive_points_with_sum(size - 1, total - head):
            yield (head,) + tail


def lattice_count_simplex(x, m):
    """Count cone points with coordinate sum exactly m.  In terms of the
    stable specialization this is the coefficient of q^(m - |I|): the monomial
    weight counts sum (a_i - 1), offset by the ground size."""
    ground = GroundSet(x.ground)
    rel = x.relative()
    total = 0
    for values in _positive_points_with_sum(ground.size, m):
        if _classify(ground, rel, values):
            total += 1
    return total


# Each composition contributes (-1)^length; calibrated once against the
# inverse of the submonoid indicator on one-vertex, one-edge, and four-cycle
# graphs, then frozen.  (The single-block composition is the empty face and
# contributes -1 under this convention.)
def euler_characteristic(x):
    return sum((-1) ** c.length for c in x.relative())


def closed_cone_weight(x, point):
    """The multiplicity of a lattice point for the reciprocity count.

    Ranges over the cones whose closure contains the point (compositions of
    delta-minus-gamma refining the point's induced composition), each signed
    by its codimension.  The alternating sum is the local relative Euler
    characteristic at the point; it is non-negative on this complex class
    (e.g. for coloring complexes it counts the acyclic orientations
    compatible with the point, 14 for the constant point of the four-cycle),
    and a plain unsigned count provably breaks the reciprocity identity.
    """
    ground = GroundSet(x.ground)
    induced = induced_composition(ground, dict(point))
    size = len(x.ground)
    return sum(
        (-1) ** (size - c.length) for c in x.relative() if refines(c, induced)
    )


def negative_count(x, n):
    """Sum of closed-cone weights over the box {1..n}^I."""
    total = 0
    for values in itertools.product(range(1, n + 1), repeat=len(x.ground)):
        total += closed_cone_weight(x, dict(zip(x.ground, values)))
    return total
