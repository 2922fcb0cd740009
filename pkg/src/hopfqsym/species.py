"""Concrete Hopf species: graphs, posets, matroids, and relative composition
complexes, together with the canonical complexes attached to an element.

Graphs and matroids have total restriction/contraction; posets are partial
(both maps require the chosen subset to be a down-set); relative composition
complexes carry only the monoid product, so their restriction and contraction
are undefined everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .combinat import (
    GroundSet,
    OverlappingGroundError,
    SetComposition,
    coarsening_closure,
    quasi_shuffles,
    refines,
    set_compositions,
)
from .hopf import _check_cap, minors


def _sub_ground(ground, subset):
    return tuple(lab for lab in ground if lab in subset)


def _require_subset(ground, subset):
    extra = set(subset) - set(ground)
    if extra:
        raise ValueError("labels %r not in ground set %r" % (sorted(extra), ground))


@dataclass(frozen=True)
class Graph:
    ground: tuple
    edges: frozenset

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise ValueError("edges must join two distinct vertices: %r" % (e,))
            _require_subset(self.ground, e)

    @classmethod
    def make(cls, vertices, edge_pairs=()):
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edge_pairs))

    def restrict(self, subset):
        _require_subset(self.ground, subset)
        subset = frozenset(subset)
        return Graph(
            _sub_ground(self.ground, subset),
            frozenset(e for e in self.edges if e <= subset),
        )

    def contract(self, subset):
        _require_subset(self.ground, subset)
        return self.restrict(frozenset(self.ground) - frozenset(subset))

    def __mul__(self, other):
        if set(self.ground) & set(other.ground):
            raise OverlappingGroundError("graph product needs disjoint vertex sets")
        return Graph(self.ground + other.ground, self.edges | other.edges)

    def relabel(self, mapping):
        return Graph(
            tuple(mapping[v] for v in self.ground),
            frozenset(frozenset(mapping[v] for v in e) for e in self.edges),
        )

    def key(self):
        return ("graph", self.ground, tuple(sorted(tuple(sorted(e)) for e in self.edges)))

    def to_dict(self):
        return {
            "vertices": list(self.ground),
            "edges": sorted(sorted(e) for e in self.edges),
        }

    @classmethod
    def from_dict(cls, data):
        return cls.make(data["vertices"], data["edges"])

    def __repr__(self):
        return "Graph(%s; %s)" % (
            ",".join(self.ground),
            " ".join("-".join(sorted(e)) for e in sorted(self.edges, key=sorted)) or "no edges",
        )


@dataclass(frozen=True)
class Poset:
    """A strict partial order, stored as its full (transitively closed) set of
    pairs (a, b) meaning a < b."""

    ground: tuple
    relation: frozenset

    def __post_init__(self):
        for a, b in self.relation:
            _require_subset(self.ground, (a, b))
            if a == b:
                raise ValueError("relation must be irreflexive")
            if (b, a) in self.relation:
                raise ValueError("relation must be antisymmetric")
        for a, b in self.relation:
            for c, d in self.relation:
                if b == c and (a, d) not in self.relation:
                    raise ValueError("relation must be transitively closed")

    @classmethod
    def from_covers(cls, elements, covers):
        rel = {(a, b) for a, b in covers}
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c, d in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        return cls(tuple(elements), frozenset(rel))

    def is_down_set(self, subset):
        subset = frozenset(subset)
        return all(a in subset for a, b in self.relation if b in subset)

    def restrict(self, subset):
        _require_subset(self.ground, subset)
        subset = frozenset(subset)
        if not self.is_down_set(subset):
            return None
        return Poset(
            _sub_ground(self.ground, subset),
            frozenset((a, b) for a, b in self.relation if a in subset and b in subset),
        )

    def contract(self, subset):
        _require_subset(self.ground, subset)
        subset = frozenset(subset)
        if not self.is_down_set(subset):
            return None
        rest = frozenset(self.ground) - subset
        return Poset(
            _sub_ground(self.ground, rest),
            frozenset((a, b) for a, b in self.relation if a in rest and b in rest),
        )

    def __mul__(self, other):
        if set(self.ground) & set(other.ground):
            raise OverlappingGroundError("poset product needs disjoint ground sets")
        return Poset(self.ground + other.ground, self.relation | other.relation)

    def relabel(self, mapping):
        return Poset(
            tuple(mapping[v] for v in self.ground),
            frozenset((mapping[a], mapping[b]) for a, b in self.relation),
        )

    def key(self):
        return ("poset", self.ground, tuple(sorted(self.relation)))

    def covers(self):
        out = []
        for a, b in self.relation:
            if not any((a, c) in self.relation and (c, b) in self.relation for c in self.ground):
                out.append((a, b))
        return sorted(out)

    def to_dict(self):
        return {"elements": list(self.ground), "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_dict(cls, data):
        return cls.from_covers(data["elements"], [tuple(c) for c in data["covers"]])

    def __repr__(self):
        return "Poset(%s; %s)" % (
            ",".join(self.ground),
            " ".join("%s<%s" % c for c in self.covers()) or "antichain",
        )


@dataclass(frozen=True)
class Matroid:
    ground: tuple
    independents: frozenset

    def __post_init__(self):
        ind = self.independents
        if frozenset() not in ind:
            raise ValueError("the empty set must be independent")
        for j in ind:
            _require_subset(self.ground, j)
            for x in j:
                if j - {x} not in ind:
                    raise ValueError("independents must be downward closed")
        for a in ind:
            for b in ind:
                if len(a) < len(b) and not any(a | {x} in ind for x in b - a):
                    raise ValueError("exchange axiom fails for %r, %r" % (sorted(a), sorted(b)))

    @classmethod
    def from_bases(cls, ground, bases):
        ind = set()
        for b in bases:
            b = frozenset(b)
            for r in range(len(b) + 1):
                ind.update(frozenset(c) for c in itertools.combinations(b, r))
        return cls(tuple(ground), frozenset(ind))

    @classmethod
    def uniform(cls, rank, ground):
        ground = tuple(ground)
        ind = {
            frozenset(c)
            for r in range(rank + 1)
            for c in itertools.combinations(ground, r)
        }
        return cls(ground, frozenset(ind))

    def rank(self):
        return max(len(j) for j in self.independents)

    def restrict(self, subset):
        _require_subset(self.ground, subset)
        subset = frozenset(subset)
        return Matroid(
            _sub_ground(self.ground, subset),
            frozenset(j for j in self.independents if j <= subset),
        )

    def contract(self, subset):
        _require_subset(self.ground, subset)
        subset = frozenset(subset)
        basis = frozenset()
        for j in self.independents:
            if j <= subset and len(j) > len(basis):
                basis = j
        rest = frozenset(self.ground) - subset
        ind = set()
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(sorted(rest), r):
                j = frozenset(combo)
                if j | basis in self.independents:
                    ind.add(j)
        return Matroid(_sub_ground(self.ground, rest), frozenset(ind))

    def __mul__(self, other):
        if set(self.ground) & set(other.ground):
            raise OverlappingGroundError("matroid direct sum needs disjoint grounds")
        ind = frozenset(
            a | b for a in self.independents for b in other.independents
        )
        return Matroid(self.ground + other.ground, ind)

    def relabel(self, mapping):
        return Matroid(
            tuple(mapping[v] for v in self.ground),
            frozenset(frozenset(mapping[x] for x in j) for j in self.independents),
        )

    def key(self):
        return (
            "matroid",
            self.ground,
            tuple(sorted(tuple(sorted(j)) for j in self.independents)),
        )

    def bases(self):
        r = self.rank()
        return sorted(sorted(j) for j in self.independents if len(j) == r)

    def to_dict(self):
        return {"ground": list(self.ground), "bases": self.bases()}

    @classmethod
    def from_dict(cls, data):
        return cls.from_bases(data["ground"], data["bases"])

    def __repr__(self):
        return "Matroid(%s; rank %d)" % (",".join(self.ground), self.rank())


@dataclass(frozen=True)
class RelComplex:
    """A relative composition complex: coarsening-closed sets gamma <= delta
    of set compositions of the ground set."""

    ground: tuple
    delta: frozenset
    gamma: frozenset

    def __post_init__(self):
        gs = GroundSet(self.ground)
        for comp in self.delta | self.gamma:
            if comp.ground != gs:
                raise ValueError("composition %s is not on the ground set" % (comp,))
        if not self.gamma <= self.delta:
            raise ValueError("gamma must be contained in delta")
        if coarsening_closure(self.delta) != self.delta:
            raise ValueError("delta is not closed under coarsening")
        if coarsening_closure(self.gamma) != self.gamma:
            raise ValueError("gamma is not closed under coarsening")

    @classmethod
    def make(cls, ground, delta_facets, gamma_facets=()):
        """Build from generating compositions (given as lists of label blocks);
        the coarsening closure is applied to both families."""
        ground = tuple(ground)
        gs = GroundSet(ground)
        delta = coarsening_closure(
            SetComposition.from_labels(gs, f) for f in delta_facets
        )
        gamma = coarsening_closure(
            SetComposition.from_labels(gs, f) for f in gamma_facets
        )
        return cls(ground, delta, gamma)

    def relative(self):
        """The compositions of delta that are not in gamma."""
        return self.delta - self.gamma

    def restrict(self, subset):
        return None

    def contract(self, subset):
        return None

    def __mul__(self, other):
        return complex_product(self, other)

    def relabel(self, mapping):
        new_ground = tuple(mapping[v] for v in self.ground)
        gs = GroundSet(new_ground)

        def move(comp):
            return SetComposition.from_labels(
                gs, [[mapping[lab] for lab in block] for block in comp.block_labels()]
            )

        return RelComplex(
            new_ground,
            frozenset(move(c) for c in self.delta),
            frozenset(move(c) for c in self.gamma),
        )

    def key(self):
        def enc(comps):
            return tuple(sorted(tuple(map(tuple, c.to_json())) for c in comps))

        return ("complex", self.ground, enc(self.delta), enc(self.gamma))

    def facets(self, family=None):
        """Maximal compositions under refinement within the given family."""
        family = self.delta if family is None else family
        out = []
        for c in family:
            if not any(d != c and refines(d, c) for d in family):
                out.append(c)
        return out

    def to_dict(self):
        return {
            "ground": list(self.ground),
            "delta_facets": sorted(c.to_json() for c in self.facets(self.delta)),
            "gamma_facets": sorted(c.to_json() for c in self.facets(self.gamma)),
        }

    @classmethod
    def from_dict(cls, data):
        return cls.make(data["ground"], data["delta_facets"], data["gamma_facets"])

    def __repr__(self):
        return "RelComplex(%s; |delta|=%d, |gamma|=%d)" % (
            ",".join(self.ground),
            len(self.delta),
            len(self.gamma),
        )


def complex_product(x, y):
    """Monoid product: delta parts quasi-shuffle with delta parts, and the
    gamma part collects shuffles meeting gamma on either side."""
    if set(x.ground) & set(y.ground):
        raise OverlappingGroundError("complex product needs disjoint grounds")
    ground = x.ground + y.ground
    delta, gamma = set(), set()
    for c in x.delta:
        for d in y.delta:
            mixed = quasi_shuffles(c, d)
            delta.update(mixed)
            if c in x.gamma or d in y.gamma:
                gamma.update(mixed)
    delta, gamma = frozenset(delta), frozenset(gamma)
    assert coarsening_closure(delta) == delta, "product delta not coarsening-closed"
    assert coarsening_closure(gamma) == gamma, "product gamma not coarsening-closed"
    return RelComplex(ground, delta, gamma)


def sigma_compositions(labels, force=False):
    """All set compositions of the labels (the faces of the full fan)."""
    _check_cap(labels, force)
    return frozenset(set_compositions(GroundSet(labels)))


def forbidden_block(x, comp, block_index):
    """A block B of a gamma composition is forbidden when no composition of
    delta-minus-gamma refining the composition keeps B as a block."""
    block = comp.blocks[block_index]
    for d in x.relative():
        if refines(d, comp) and block in d.blocks:
            return False
    return True


def is_forbidden_complex(x):
    """Every gamma composition must have a forbidden block or be a facet of delta."""
    delta_facets = set(x.facets(x.delta))
    for comp in x.gamma:
        if comp in delta_facets:
            continue
        if not any(forbidden_block(x, comp, i) for i in range(comp.length)):
            return False
    return True


def coloring_complex(graph, force=False):
    """Gamma holds the compositions with an edge inside a block; delta is the
    full fan."""
    sigma = sigma_compositions(graph.ground, force)
    gamma = frozenset(
        c
        for c in sigma
        if any(e <= b for b in c.block_label_sets() for e in graph.edges)
    )
    return RelComplex(graph.ground, sigma, gamma)


def delta_complex(h, force=False):
    """The compositions along which every minor of h is defined (gamma void)."""
    _check_cap(h.ground, force)
    comps = frozenset(
        c for c in set_compositions(GroundSet(h.ground)) if minors(h, c) is not None
    )
    assert coarsening_closure(comps) == comps, "defined-minor family not coarsening-closed"
    return RelComplex(h.ground, comps, frozenset())


def gamma_complex(predicate, h, force=False):
    """The canonical forbidden complex of (K, h): delta collects compositions
    with defined minors, gamma those with some minor outside K."""
    _check_cap(h.ground, force)
    delta, gamma = [], []
    for c in set_compositions(GroundSet(h.ground)):
        ms = minors(h, c)
        if ms is None:
            continue
        delta.append(c)
        if not all(predicate(m) for m in ms):
            gamma.append(c)
    x = RelComplex(h.ground, frozenset(delta), frozenset(gamma))
    assert is_forbidden_complex(x), "canonical complex failed the forbidden test"
    return x


# Built-in submonoid predicates.


def is_edgeless(h):
    return isinstance(h, Graph) and not h.edges


def is_antichain(h):
    return isinstance(h, Poset) and not h.relation


def is_composition_subspecies(h):
    return isinstance(h, RelComplex) and not h.gamma


def whole_species(h):
    return True
