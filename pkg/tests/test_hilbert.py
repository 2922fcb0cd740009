import pytest

from hopfqsym.combinat import BoundExceededError
from hopfqsym.corpus import builtin_complexes, builtin_graphs, submonoid_pairs
from hopfqsym.ehrhart import ehrhart_qsym
from hopfqsym.hilbert import (
    EHRHART_SHIFT,
    BigradedCount,
    cone_faces,
    complex_faces,
    dcone_faces,
    hilbert_bigraded,
    hilbert_q,
    hilbert_unigraded,
    module_faces,
)
from hopfqsym.qseries import ps, ps1
from hopfqsym.species import RelComplex, coloring_complex, gamma_complex


def corpus_complexes():
    out = {}
    for name, x in builtin_complexes().items():
        if len(x.ground) <= 4:
            out[name] = x
    for name, g in builtin_graphs().items():
        out["coloring:" + name] = coloring_complex(g)
    for kname, pred, phi, name, h in submonoid_pairs():
        if len(h.ground) <= 4:
            out["canonical:%s:%s" % (kname, name)] = gamma_complex(pred, h)
    return out


# --- coning ------------------------------------------------------------------


def test_cone_of_void_is_void():
    assert cone_faces(frozenset(), "x") == frozenset()


def test_cone_of_empty_face_complex():
    faces = frozenset({frozenset()})
    coned = cone_faces(faces, "x")
    assert coned == frozenset({frozenset(), frozenset({"x"})})


def test_cone_doubles_face_count():
    x = builtin_complexes()["kequal-2-3"]
    faces = complex_faces(x.delta)
    assert len(cone_faces(faces, "u")) == 2 * len(faces)
    assert len(cone_faces(cone_faces(faces, "u"), "v")) == 4 * len(faces)


def test_dcone_vertices_are_bottom_and_top():
    x = coloring_complex(builtin_graphs()["edge2"])
    gamma, delta = dcone_faces(x)
    verts = set().union(*delta)
    assert frozenset() in verts
    assert frozenset(x.ground) in verts


# --- the calibration procedure -------------------------------------------------
# Two sides computed by unrelated code paths: monomial counting in the
# Stanley-Reisner module of the double cone versus specializations of the
# cone-point generating function.  The documented shift makes them agree.


@pytest.mark.parametrize("name", ["coloring-edge2", "coloring-cycle4"])
def test_calibration_unigraded(name):
    g = builtin_graphs()["edge2" if "edge2" in name else "cycle4"]
    x = coloring_complex(g)
    expansion = ps1(ehrhart_qsym(x))
    for n in range(7):
        assert hilbert_unigraded(x, n) == expansion.eval(n + EHRHART_SHIFT)


@pytest.mark.parametrize("name", ["coloring-edge2", "coloring-cycle4"])
def test_calibration_q_twisted(name):
    g = builtin_graphs()["edge2" if "edge2" in name else "cycle4"]
    x = coloring_complex(g)
    e = ehrhart_qsym(x)
    size = len(x.ground)
    for n in range(5):
        lhs = hilbert_q(x, n).subs_qinv().shifted(n * size)
        assert lhs == ps(e, n + EHRHART_SHIFT)


# --- theorem on the whole corpus -----------------------------------------------


def test_unigraded_identity_on_corpus():
    for name, x in corpus_complexes().items():
        expansion = ps1(ehrhart_qsym(x))
        for n in range(6):
            assert hilbert_unigraded(x, n) == expansion.eval(n + EHRHART_SHIFT), (name, n)


def test_q_twisted_identity_on_corpus():
    for name, x in corpus_complexes().items():
        e = ehrhart_qsym(x)
        size = len(x.ground)
        for n in range(6):
            lhs = hilbert_q(x, n).subs_qinv().shifted(n * size)
            rhs = ps(e, n + EHRHART_SHIFT)
            assert lhs == rhs, (name, n)


# --- basic structure -----------------------------------------------------------


def test_zero_module_when_gamma_equals_delta():
    x = builtin_complexes()["kequal-2-3"]
    collapsed = RelComplex(x.ground, x.delta, x.delta)
    assert module_faces(collapsed) == frozenset()
    for n in range(4):
        assert hilbert_unigraded(collapsed, n) == 0
        assert hilbert_q(collapsed, n) == 0


def test_row_zero_convention():
    # H(0) = 1 exactly when the empty support is a module face, i.e. when
    # gamma is void while delta is not
    void_gamma = coloring_complex(builtin_graphs()["point"])
    assert hilbert_unigraded(void_gamma, 0) == 1
    nonvoid_gamma = coloring_complex(builtin_graphs()["edge2"])
    assert hilbert_unigraded(nonvoid_gamma, 0) == 0


def test_bigraded_table_bounds():
    x = coloring_complex(builtin_graphs()["path3"])
    size = len(x.ground)
    table = hilbert_bigraded(x, 40, 5)
    assert isinstance(table, BigradedCount)
    for (m, n), count in table.table.items():
        assert count > 0
        assert 0 <= m <= n * size
    for n in range(6):
        assert sum(table.row(n).values()) == hilbert_unigraded(x, n)


def test_bigraded_matches_q_row():
    x = builtin_complexes()["chambers8"]
    table = hilbert_bigraded(x, 100, 4)
    for n in range(5):
        row = hilbert_q(x, n)
        assert {m: c for m, c in table.row(n).items()} == dict(row.coeffs)


def test_module_faces_are_boolean_chains():
    x = builtin_complexes()["chambers8"]
    for face in module_faces(x):
        verts = sorted(face, key=len)
        for small, big in zip(verts, verts[1:]):
            assert small < big  # strict containment all the way up
    gamma_faces, delta_faces = dcone_faces(x)
    assert module_faces(x) == delta_faces - gamma_faces


def test_q_at_one_is_unigraded():
    x = builtin_complexes()["kequal-2-4"]
    for n in range(5):
        assert hilbert_q(x, n).at_one() == hilbert_unigraded(x, n)


def test_ground_cap_enforced():
    x = builtin_complexes()["simplex222"]
    with pytest.raises(BoundExceededError):
        hilbert_unigraded(x, 2)
