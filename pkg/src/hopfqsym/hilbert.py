"""Bigraded Hilbert functions of double-coned relative composition complexes.

The monomial ring has one indeterminate per subset S of the ground set, with
bidegree (|S|, 1).  Faces of the double cone over a composition complex are
exactly chains in the full boolean lattice: the flag of a composition plus
any subset of the two cone vertices, which are identified with the empty set
and the full ground set.  A monomial lies in the module when its support is a
face of dcone(delta) but not of dcone(gamma).

Calibration (frozen): with these gradings the unigraded count at n equals the
q=1 box specialization of the cone generating function at n + 1, and the
q-graded row satisfies q^(n*|I|) * H(q^-1, n) = ps(E)(n + 1).  The shift of
one is recorded as EHRHART_SHIFT and verified by the test suite on the
one-edge and four-cycle coloring complexes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import BoundExceededError
from .qseries import LaurentPoly

GROUND_CAP = 5

# H(n) agrees with the lattice-point side evaluated at n + EHRHART_SHIFT.
EHRHART_SHIFT = 1


def cone_faces(faces, vertex):
    """Cone over a set of faces: add the vertex to every face and keep the
    originals; the void complex (no faces at all) stays void."""
    faces = frozenset(faces)
    if not faces:
        return faces
    return faces | frozenset(f | {vertex} for f in faces)


def complex_faces(comps):
    """The flags of a set of compositions, as frozensets of label-subsets."""
    out = set()
    for comp in comps:
        gs = comp.ground
        chain = comp.prefix_masks()[:-1]
        out.add(frozenset(frozenset(gs.labels_of(m)) for m in chain))
    return frozenset(out)


def dcone_faces(x):
    """Faces of the double cone over (gamma, delta); the two cone vertices are
    the empty subset and the full ground set."""
    bottom = frozenset()
    top = frozenset(x.ground)
    gamma = cone_faces(cone_faces(complex_faces(x.gamma), bottom), top)
    delta = cone_faces(cone_faces(complex_faces(x.delta), bottom), top)
    return gamma, delta


def module_faces(x):
    """Supports of the module's monomials: dcone(delta) minus dcone(gamma)."""
    gamma, delta = dcone_faces(x)
    return delta - gamma


def _check_cap(x):
    if len(x.ground) > GROUND_CAP:
        raise BoundExceededError(
            "Hilbert enumeration capped at ground size %d" % GROUND_CAP
        )


def _positive_exponents(count, total):
    if count == 0:
        if total == 0:
            yield ()
        return
    for head in range(1, total - count + 2):
        for tail in _positive_exponents(count - 1, total - head):
            yield (head,) + tail


@dataclass
class BigradedCount:
    """Counts of module monomials by bidegree (m, n)."""

    table: dict

    def value(self, m, n):
        return self.table.get((m, n), 0)

    def row(self, n):
        return {m: c for (m, nn), c in self.table.items() if nn == n}

    def to_json(self):
        return [[m, n, c] for (m, n), c in sorted(self.table.items())]


def hilbert_bigraded(x, m_max, n_max):
    """Count monomials with support a module face, first degree
    sum a_i * |S_i| <= m_max, second degree sum a_i <= n_max."""
    _check_cap(x)
    table = {}
    for face in module_faces(x):
        degrees = sorted(len(v) for v in face)
        for n in range(0, n_max + 1):
            for exps in _positive_exponents(len(degrees), n):
                m = sum(a * d for a, d in zip(exps, degrees))
                if m <= m_max:
                    table[(m, n)] = table.get((m, n), 0) + 1
    return BigradedCount(table)


def hilbert_q(x, n):
    """The generating polynomial in q of the monomials of second degree n."""
    _check_cap(x)
    acc = {}
    for face in module_faces(x):
        degrees = [len(v) for v in face]
        for exps in _positive_exponents(len(degrees), n):
            m = sum(a * d for a, d in zip(exps, degrees))
            acc[m] = acc.get(m, 0) + 1
    return LaurentPoly(acc)


def hilbert_unigraded(x, n):
    """The total number of module monomials of second degree n."""
    return hilbert_q(x, n).at_one()
