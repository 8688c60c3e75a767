import numpy as np
import pytest

from gazekit.errors import InvalidVectorError
from gazekit.geometry import (
    Convention,
    angular_error_deg,
    compose_gaze,
    decompose_gaze,
    normalize_yawpitch,
    vec_to_yawpitch,
    yawpitch_to_vec,
)


def test_axis_directions():
    assert np.allclose(yawpitch_to_vec((0, 0)), [0, 0, 1])
    assert np.allclose(yawpitch_to_vec((90, 0)), [1, 0, 0])
    assert np.allclose(yawpitch_to_vec((0, 90)), [0, 1, 0])


def test_vec_to_yawpitch_examples():
    assert np.allclose(vec_to_yawpitch((0, 0, 1)), [0, 0])
    assert np.allclose(vec_to_yawpitch((0, 0, -1)), [180, 0])
    # oracle: direct trig evaluation at double precision
    v = (np.sqrt(3) / 2, 0.0, 0.5)
    np.testing.assert_allclose(vec_to_yawpitch(v), [60.0, 0.0], atol=1e-12)


def test_vec_to_yawpitch_rejects_non_unit():
    # the 4-digit truncation of (sqrt(3)/2, 0, 0.5) is off unit by ~2e-5
    with pytest.raises(InvalidVectorError):
        vec_to_yawpitch((0.8660, 0, 0.5))
    with pytest.raises(InvalidVectorError):
        vec_to_yawpitch((0, 0, 2))


def test_round_trip_10000_random_poses():
    rng = np.random.default_rng(1234)
    yp = np.stack(
        [rng.uniform(-179.9, 180.0, 10000), rng.uniform(-89.0, 89.0, 10000)], axis=-1
    )
    back = vec_to_yawpitch(yawpitch_to_vec(yp))
    np.testing.assert_allclose(back, yp, atol=1e-9)


def test_gimbal_tie_break():
    np.testing.assert_allclose(vec_to_yawpitch((0, 1, 0)), [0, 90])
    np.testing.assert_allclose(normalize_yawpitch((35.0, 90.0)), [0, 90])


def test_normalize_folds_over_the_top():
    np.testing.assert_allclose(normalize_yawpitch((0.0, 100.0)), [180.0, 80.0])
    np.testing.assert_allclose(normalize_yawpitch((90.0, -120.0)), [-90.0, -60.0])


@pytest.mark.parametrize("conv", Convention.candidates(), ids=lambda c: c.name)
def test_compose_identity_head_is_exact(conv):
    out = compose_gaze((0, 0), (37, -12), conv)
    assert out.tolist() == [37.0, -12.0]


@pytest.mark.parametrize("conv", Convention.candidates(), ids=lambda c: c.name)
def test_compose_centered_eye_is_exact(conv):
    out = compose_gaze((30, 0), (0, 0), conv)
    assert out.tolist() == [30.0, 0.0]
    out = compose_gaze((-40, 20), (0, 0), conv)
    assert out.tolist() == [-40.0, 20.0]


def test_compose_anchor_pose():
    # with zero head pitch the yaw angles add exactly
    for conv in Convention.candidates():
        gaze = compose_gaze((60, 0), (50, 10), conv)
        np.testing.assert_allclose(gaze, [110.0, 10.0], atol=1e-9)
        assert angular_error_deg(gaze, (109.0, 10.0)) <= 2.0


@pytest.mark.parametrize("conv", Convention.candidates(), ids=lambda c: c.name)
def test_compose_mirror_equivariance(conv):
    rng = np.random.default_rng(7)
    heads = np.stack([rng.uniform(-70, 70, 200), rng.uniform(-70, 70, 200)], axis=-1)
    eyes = np.stack([rng.uniform(-50, 50, 200), rng.uniform(-50, 50, 200)], axis=-1)
    direct = compose_gaze(heads, eyes, conv)
    mirrored = compose_gaze(heads * [-1, 1], eyes * [-1, 1], conv)
    np.testing.assert_allclose(mirrored, direct * [-1, 1], atol=1e-9)


def test_decompose_inverts_compose():
    conv = Convention("pitch-then-yaw", "extrinsic")
    rng = np.random.default_rng(11)
    heads = np.stack([rng.uniform(-70, 70, 100), rng.uniform(-70, 70, 100)], axis=-1)
    eyes = np.stack([rng.uniform(-50, 50, 100), rng.uniform(-50, 50, 100)], axis=-1)
    gaze = compose_gaze(heads, eyes, conv)
    back = decompose_gaze(gaze, heads, conv)
    np.testing.assert_allclose(back, eyes, atol=1e-9)


def test_angular_error_basics():
    assert angular_error_deg((17, -4), (17, -4)) == 0.0
    np.testing.assert_allclose(angular_error_deg((0, 0), (90, 0)), 90.0)
    np.testing.assert_allclose(angular_error_deg((0, 0), (60, 0)), 60.0)


def test_angular_error_metric_properties():
    rng = np.random.default_rng(99)
    triples = [
        np.stack([rng.uniform(-179, 179, 1000), rng.uniform(-89, 89, 1000)], axis=-1)
        for _ in range(3)
    ]
    a, b, c = triples
    ab = angular_error_deg(a, b)
    ba = angular_error_deg(b, a)
    np.testing.assert_allclose(ab, ba, atol=1e-12)
    assert np.all(ab >= 0) and np.all(ab <= 180)
    ac = angular_error_deg(a, c)
    cb = angular_error_deg(c, b)
    assert np.all(ab <= ac + cb + 1e-9)
    # zero iff directions coincide
    assert np.all(angular_error_deg(a, a) < 1e-9)
    assert np.all(ab[np.any(np.abs(a - b) > 1.0, axis=-1)] > 0)
