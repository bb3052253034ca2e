"""Property-based tests for graph loading, inference and validation.

Every generated configuration is valid, and validation, inference and
the census do not depend on how vertices and edges are numbered.
"""

from hypothesis import HealthCheck, given, settings

from tests.utils.strategies import planar_configs, relabelled_pairs, rotated_faces
from zappatic.graph import counts, infer_r3, load, serialize, validate

PROPERTY_SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@PROPERTY_SETTINGS
@given(planar_configs())
def test_generated_graphs_are_valid(graph) -> None:
    """Should validate with both pair counts equal."""
    report = validate(graph)
    assert report.valid
    assert report.pair_count == report.pair_cover


@PROPERTY_SETTINGS
@given(planar_configs())
def test_inference_is_idempotent(graph) -> None:
    """Should add nothing to a prepared graph."""
    assert infer_r3(graph) == graph


@PROPERTY_SETTINGS
@given(planar_configs())
def test_serialization_is_a_fixed_point(graph) -> None:
    """Should reload to the same graph and serialize to the same bytes."""
    text = serialize(graph)
    assert load(text) == graph
    assert serialize(load(text)) == text


@PROPERTY_SETTINGS
@given(relabelled_pairs())
def test_census_ignores_numbering(pair) -> None:
    """Should count the same points and valences after relabelling."""
    graph, shuffled = pair
    assert validate(shuffled).valid
    before, after = counts(graph), counts(shuffled)
    assert (before.faces, before.open_faces, before.angles) == (after.faces, after.open_faces, after.angles)
    assert sorted(before.valences) == sorted(after.valences)


@PROPERTY_SETTINGS
@given(planar_configs())
def test_handshake(graph) -> None:
    """Should have valences summing to twice the edge count."""
    census = counts(graph)
    assert sum(census.valences) == 2 * census.e


@PROPERTY_SETTINGS
@given(rotated_faces())
def test_face_rotation_keeps_verdict(pair) -> None:
    """Should validate the same when a closed face lists its cycle from another edge or backwards."""
    graph, rotated = pair
    before, after = validate(graph), validate(rotated)
    assert after.valid == before.valid
    assert (after.pair_count, after.pair_cover) == (before.pair_count, before.pair_cover)
    assert counts(rotated).faces == counts(graph).faces
