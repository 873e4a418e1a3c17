import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from orbit_concavity import schemas
from orbit_concavity.cralg import CRAlgebraSpec, SpecError, alpha_pairs, build_spec, enumerate_phis, is_fundamental
from orbit_concavity.satake import catalog, resolve

SMALL_CATALOG = catalog(4)


def _combinatorial_fundamental(d, phi):
    """Phi uses only black or arrow nodes and never both ends of an arrow."""
    black = {i + 1 for i in d.black}
    arrowed = {i + 1 for pair in d.arrows for i in pair}
    if not set(phi) <= black | arrowed:
        return False
    return not any({i + 1, j + 1} <= set(phi) for i, j in d.arrows)


def test_su13_phi2_layout():
    spec = build_spec(resolve("su(1,3)"), [2])
    assert spec.roots_of(spec.nilradical) == [(0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)]
    # sigma*: a1 -> a2+a3, a2 -> -a2, a3 -> a1+a2, so a1+a2 -> a3 and a2+a3 -> a1 leave the nilradical
    assert spec.roots_of(spec.characteristic) == [(1, 1, 1)]
    assert spec.roots_of(spec.real_characteristic) == [(1, 1, 1)]
    assert spec.roots_of(spec.holomorphic_index) == [(0, 1, 0), (1, 1, 0), (0, 1, 1)]
    pairs = alpha_pairs(spec, spec.index_of((1, 1, 1)))
    assert [tuple(spec.system.roots[k] for k in ab) for ab in pairs] == [
        ((1, 1, 0), (1, 1, 0)), ((0, 1, 1), (0, 1, 1))]


def test_su13_phi1_layout():
    spec = build_spec(resolve("su13"), [1])
    assert spec.roots_of(spec.holomorphic_index) == [(1, 0, 0), (1, 1, 0)]
    assert spec.roots_of(spec.real_characteristic) == [(1, 1, 1)]
    pairs = alpha_pairs(spec, spec.index_of((1, 1, 1)))
    assert [tuple(spec.system.roots[k] for k in ab) for ab in pairs] == [
        ((1, 0, 0), (1, 0, 0)), ((1, 1, 0), (1, 1, 0))]


@pytest.mark.parametrize("d", SMALL_CATALOG, ids=lambda d: d.name)
def test_partition_and_conjugation_stability(d):
    R = d.system
    for phi in enumerate_phis(d):
        spec = build_spec(d, phi)
        perm = spec.conj.perm
        nil, char, hol = set(spec.nilradical), set(spec.characteristic), set(spec.holomorphic_index)
        assert char | hol == nil and not char & hol
        assert set(spec.conj_nilradical) == {perm[k] for k in nil}
        assert {perm[k] for k in char} == char
        assert all(perm[k] not in nil for k in hol)
        assert set(spec.real_characteristic) == {k for k in char if perm[k] == k}
        q = set(spec.q_roots)
        assert all(R.neg[k] in q for k in q - nil)
        assert all(k in q for k in R.positives)
        if not phi:
            assert spec.degenerate and not nil


@pytest.mark.parametrize("d", catalog(5), ids=lambda d: d.name)
def test_fundamental_matches_diagram_rule(d):
    for phi in enumerate_phis(d):
        if not phi:
            continue
        assert is_fundamental(build_spec(d, phi)) == _combinatorial_fundamental(d, phi), phi


def test_non_fundamental_counts_for_complex_forms():
    def count(name):
        d = resolve(name)
        return sum(not is_fundamental(build_spec(d, phi)) for phi in enumerate_phis(d) if phi)
    assert count("complex-A1") == 1
    assert count("complex-A2") == 7


@pytest.mark.parametrize("name", ["sl(4,R)", "eI", "g", "fI", "so(4,4)"])
def test_split_forms_are_never_fundamental(name):
    d = resolve(name)
    assert all(not is_fundamental(build_spec(d, phi)) for phi in enumerate_phis(d) if phi)


@given(st.sampled_from(catalog(6)), st.data())
@settings(max_examples=60, deadline=None)
def test_alpha_pairs_solve_the_defining_equation(d, data):
    phi = data.draw(st.sets(st.integers(1, d.n_nodes), min_size=1))
    spec = build_spec(d, phi)
    R = spec.system
    c = spec.conj
    hol = set(spec.holomorphic_index)
    for g in spec.characteristic:
        pairs = alpha_pairs(spec, g)
        brute = {(a, b) for a in hol for b in hol
                 if tuple(x + y for x, y in zip(R.roots[a], c.sigma_star(R.roots[b]))) == R.roots[g]}
        assert set(pairs) == brute


def test_alpha_pairs_rejects_non_characteristic_root():
    spec = build_spec(resolve("su(1,3)"), [2])
    with pytest.raises(SpecError):
        alpha_pairs(spec, spec.index_of((0, 1, 0)))


@pytest.mark.parametrize("phi", [[0], [4], [1, 9]])
def test_out_of_range_phi(phi):
    with pytest.raises(SpecError):
        build_spec(resolve("su(1,3)"), phi)


def test_index_of_unknown_root():
    with pytest.raises(SpecError):
        build_spec(resolve("su(1,3)"), [2]).index_of((2, 0, 0))


def test_enumerate_phis_order():
    phis = list(enumerate_phis(resolve("su(1,3)")))
    assert phis == [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    assert len(list(enumerate_phis(resolve("complex-A2")))) == 16


def test_spec_round_trip_and_schema():
    spec = build_spec(resolve("fII"), [3, 1])
    assert spec.phi == (1, 3)
    doc = spec.to_dict()
    jsonschema.validate(doc, schemas.SPEC)
    assert CRAlgebraSpec.from_dict(doc) == spec
