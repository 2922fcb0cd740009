"""Built-in corpus of named elements and characters.

Every worked example ships as a named fixture: small graphs up to the
four-cycle, the fork and zigzag posets, two uniform matroids, the k-equal
complexes, an eight-chamber forbidden complex, and a relative complex that is
not forbidden.  The verification suites and the CLI resolve names here.
"""

from __future__ import annotations

import functools

from .hopf import indicator_character, invert, unit_character, zeta_character
from .species import (
    Graph,
    Matroid,
    Poset,
    RelComplex,
    is_antichain,
    is_composition_subspecies,
    is_edgeless,
    sigma_compositions,
    whole_species,
)


@functools.cache
def builtin_graphs():
    return {
        "empty": Graph.make(()),
        "point": Graph.make(("a",)),
        "edge2": Graph.make(("a", "b"), [("a", "b")]),
        "path3": Graph.make(("x", "y", "z"), [("x", "y"), ("y", "z")]),
        "cycle4": Graph.make(
            ("m", "a", "t", "h"),
            [("m", "a"), ("a", "t"), ("t", "h"), ("h", "m")],
        ),
    }


@functools.cache
def builtin_posets():
    return {
        "chain2": Poset.from_covers(("a", "b"), [("a", "b")]),
        "antichain2": Poset.from_covers(("a", "b"), []),
        # one top element covering two incomparable bottoms
        "fork": Poset.from_covers(("x", "y", "z"), [("x", "y"), ("z", "y")]),
        # the zigzag on four elements: a < t, a < h, m < h
        "zigzag": Poset.from_covers(
            ("m", "a", "t", "h"), [("a", "t"), ("a", "h"), ("m", "h")]
        ),
    }


@functools.cache
def builtin_matroids():
    return {
        "u12": Matroid.uniform(1, ("a", "b")),
        "u23": Matroid.uniform(2, ("a", "b", "c")),
    }


def kequal_complex(k, labels):
    """Gamma holds every composition with a block of size >= k; delta is the
    full fan."""
    sigma = sigma_compositions(tuple(labels))
    gamma = frozenset(c for c in sigma if any(s >= k for s in c.type()))
    return RelComplex(tuple(labels), sigma, gamma)


def _chambers8():
    """A forbidden complex on four labels whose delta has eight chambers."""
    delta_facets = [
        [[c] for c in word] for word in
        ("abcd", "abdc", "adbc", "adcb", "dabc", "dacb", "dcab", "dcba")
    ]
    gamma_facets = [
        [["c", "d"], ["b"], ["a"]],
        [["c", "d"], ["a"], ["b"]],
        [["a", "b"], ["c"], ["d"]],
        [["a", "b"], ["d"], ["c"]],
        [["a"], ["b", "c"], ["d"]],
        [["a"], ["c", "d"], ["b"]],
        [["d"], ["a", "b"], ["c"]],
        [["d"], ["b", "c"], ["a"]],
    ]
    return RelComplex.make(("a", "b", "c", "d"), delta_facets, gamma_facets)


def _simplex222():
    """The simplex of 12|34|56 inside the full fan on six labels; a relative
    complex that is not forbidden."""
    labels = tuple("123456")
    sigma = sigma_compositions(labels)
    return RelComplex(
        labels,
        sigma,
        RelComplex.make(labels, [[["1", "2"], ["3", "4"], ["5", "6"]]]).delta,
    )


@functools.cache
def builtin_complexes():
    return {
        "kequal-2-3": kequal_complex(2, "abc"),
        "kequal-2-4": kequal_complex(2, "abcd"),
        "kequal-3-3": kequal_complex(3, "abc"),
        "kequal-3-4": kequal_complex(3, "abcd"),
        "chambers8": _chambers8(),
        "simplex222": _simplex222(),
    }


def hopf_elements():
    """All named graph, poset, and matroid fixtures."""
    out = {}
    out.update(builtin_graphs())
    out.update(builtin_posets())
    out.update(builtin_matroids())
    return out


BASE_CHARACTERS = ("zeta", "unit", "edgeless", "antichain", "composition-subspecies")


def character_by_name(name):
    """Resolve a character name; "inverse:<name>" wraps recursively."""
    if name.startswith("inverse:"):
        return invert(character_by_name(name[len("inverse:"):]))
    if name == "zeta":
        return zeta_character()
    if name == "unit":
        return unit_character()
    if name == "edgeless":
        return indicator_character("edgeless", is_edgeless)
    if name == "antichain":
        return indicator_character("antichain", is_antichain)
    if name == "composition-subspecies":
        return indicator_character("composition-subspecies", is_composition_subspecies)
    raise ValueError(
        "unknown character %r (known: %s, optionally prefixed by 'inverse:')"
        % (name, ", ".join(BASE_CHARACTERS))
    )


def submonoid_pairs():
    """Named (predicate, character, element) triples used by the identity and
    Euler-characteristic suites: the edgeless submonoid on graphs, antichains
    on posets, and the whole species on everything (matroids included)."""
    out = []
    edgeless = indicator_character("edgeless", is_edgeless)
    antichain = indicator_character("antichain", is_antichain)
    everything = zeta_character()
    for name, g in builtin_graphs().items():
        out.append(("edgeless", is_edgeless, edgeless, name, g))
    for name, p in builtin_posets().items():
        out.append(("antichain", is_antichain, antichain, name, p))
    for name, h in hopf_elements().items():
        out.append(("all", whole_species, everything, name, h))
    return out


def default_character_for(element):
    """The natural submonoid character for a species element."""
    if isinstance(element, Graph):
        return indicator_character("edgeless", is_edgeless)
    if isinstance(element, Poset):
        return indicator_character("antichain", is_antichain)
    return zeta_character()
