import numpy as np
import pytest

from seedgrow import (
    ActivationStack,
    Cam,
    ClassWeights,
    GrowConfig,
    ImageLabels,
    SaliencyMap,
    class_activation_map,
    class_score,
    extract_seeds,
    global_average_pool,
    upsample_bilinear,
)
from seedgrow.errors import (
    ChannelMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    MissingCam,
)


def stack(*channels):
    return ActivationStack(np.array(channels, dtype=np.float32))


def test_pool_sums_each_channel():
    acts = stack([[1, 2], [3, 4]])
    assert global_average_pool(acts).tolist() == [10.0]
    zeros = ActivationStack(np.zeros((3, 2, 2), dtype=np.float32))
    assert global_average_pool(zeros).tolist() == [0.0, 0.0, 0.0]
    two = stack([[1, 1], [1, 1]], [[2, 2], [2, 2]])
    assert global_average_pool(two).tolist() == [4.0, 8.0]


def test_class_score_examples():
    w = ClassWeights(np.array([[0.5, -1.0]], dtype=np.float32))
    assert class_score(np.array([10.0, 4.0]), w, 0) == pytest.approx(1.0)
    wz = ClassWeights(np.zeros((1, 2), dtype=np.float32))
    assert class_score(np.array([3.0, 7.0]), wz, 0) == 0.0
    w2 = ClassWeights(np.array([[1.0, -1.0]], dtype=np.float32))
    assert class_score(np.array([3.0, 7.0]), w2, 0) == pytest.approx(-4.0)


def test_class_score_errors():
    w = ClassWeights(np.array([[1.0, 2.0]], dtype=np.float32))
    with pytest.raises(IndexOutOfRange):
        class_score(np.zeros(2), w, 1)
    with pytest.raises(ChannelMismatch):
        class_score(np.zeros(3), w, 0)


def test_cam_weighted_sum():
    acts = stack([[1, 2]], [[3, 4]])  # two channels, 1x2
    w = ClassWeights(np.array([[1.0, -1.0]], dtype=np.float32))
    cam = class_activation_map(acts, w, 0)
    assert cam.data.tolist() == [[-2.0, -2.0]]


def test_cam_one_hot_recovers_channel():
    rng = np.random.default_rng(5)
    acts = ActivationStack(rng.normal(size=(3, 4, 5)).astype(np.float32))
    w = ClassWeights(np.array([[0.0, 1.0, 0.0]], dtype=np.float32))
    cam = class_activation_map(acts, w, 0)
    assert np.allclose(cam.data, acts.data[1].astype(np.float64))


def test_cam_channel_mismatch():
    acts = ActivationStack(np.zeros((2, 2, 2), dtype=np.float32))
    w = ClassWeights(np.zeros((1, 3), dtype=np.float32))
    with pytest.raises(ChannelMismatch):
        class_activation_map(acts, w, 0)


def test_cam_linearity_identity():
    rng = np.random.default_rng(11)
    for _ in range(50):
        k = int(rng.integers(1, 6))
        c = int(rng.integers(1, 4))
        acts = ActivationStack(rng.normal(scale=5.0, size=(k, 4, 4)).astype(np.float32))
        w = ClassWeights(rng.normal(size=(c, k)).astype(np.float32))
        row = int(rng.integers(0, c))
        cam_sum = class_activation_map(acts, w, row).data.sum()
        score = class_score(global_average_pool(acts), w, row)
        assert abs(cam_sum - score) <= 1e-4 * max(1.0, abs(score))


def test_upsample_broadcast_identity_center():
    one = Cam(np.array([[5.0]]))
    up = upsample_bilinear(one, 3, 3)
    assert (up.data == 5.0).all()

    quad = Cam(np.array([[0.0, 1.0], [1.0, 2.0]]))
    up3 = upsample_bilinear(quad, 3, 3)
    assert up3.data[1, 1] == pytest.approx(1.0)
    assert up3.data[0, 0] == 0.0 and up3.data[2, 2] == 2.0

    rng = np.random.default_rng(2)
    cam = Cam(rng.normal(size=(5, 7)))
    same = upsample_bilinear(cam, 5, 7)
    assert np.array_equal(same.data, cam.data)


def test_upsample_corners_align():
    cam = Cam(np.array([[1.0, 2.0], [3.0, 4.0]]))
    up = upsample_bilinear(cam, 5, 4)
    assert up.data[0, 0] == 1.0
    assert up.data[0, -1] == 2.0
    assert up.data[-1, 0] == 3.0
    assert up.data[-1, -1] == 4.0


def test_upsample_corners_exact_for_awkward_ratios():
    rng = np.random.default_rng(31)
    for in_h, in_w, out_h, out_w in [(4, 4, 7, 6), (3, 5, 11, 13), (6, 2, 9, 23), (5, 7, 3, 4)]:
        cam = Cam(rng.normal(size=(in_h, in_w)))
        up = upsample_bilinear(cam, out_h, out_w)
        assert up.data[0, 0] == cam.data[0, 0]
        assert up.data[0, -1] == cam.data[0, -1]
        assert up.data[-1, 0] == cam.data[-1, 0]
        assert up.data[-1, -1] == cam.data[-1, -1]


def _uniform_sal(h, w, value=1.0):
    return SaliencyMap(np.full((h, w), value))


def test_extract_seeds_single_pixel_budget():
    cam = Cam(np.array([[9.0, 1.0], [1.0, 1.0]]))
    sal = SaliencyMap(np.array([[0.5, 0.5], [0.05, 0.5]]))
    cfg = GrowConfig(seed_fraction=0.2, bg_saliency_threshold=0.1, num_classes=3)
    seeds = extract_seeds({2: cam}, ImageLabels((2,)), sal, cfg)
    assert seeds.data[0, 0] == 2          # ceil(0.2*4)=1 top pixel
    assert seeds.data[1, 0] == 0          # unclaimed, low saliency
    assert seeds.data[0, 1] == 255
    assert seeds.data[1, 1] == 255


def test_extract_seeds_no_classes_all_salient():
    cfg = GrowConfig(bg_saliency_threshold=0.1)
    seeds = extract_seeds({}, ImageLabels(()), _uniform_sal(2, 2), cfg)
    assert (seeds.data == 255).all()


def test_extract_seeds_constant_cam_contributes_nothing():
    cam = Cam(np.full((3, 3), 7.0))
    cfg = GrowConfig(num_classes=5)
    seeds = extract_seeds({1: cam}, ImageLabels((1,)), _uniform_sal(3, 3), cfg)
    assert (seeds.data == 255).all()


def test_extract_seeds_conflict_goes_to_larger_value():
    a = Cam(np.array([[10.0, 8.0], [0.0, 0.0]]))   # normalized: 1.0, 0.8
    b = Cam(np.array([[3.0, 9.0], [0.0, 0.0]]))    # normalized: 1/3, 1.0
    cfg = GrowConfig(seed_fraction=0.5, num_classes=5)
    seeds = extract_seeds({1: a, 2: b}, ImageLabels((1, 2)), _uniform_sal(2, 2), cfg)
    assert seeds.data[0, 0] == 1
    assert seeds.data[0, 1] == 2


def test_extract_seeds_conflict_tie_prefers_smaller_class():
    a = Cam(np.array([[10.0, 0.0], [0.0, 0.0]]))
    b = Cam(np.array([[5.0, 0.0], [0.0, 0.0]]))
    cfg = GrowConfig(seed_fraction=0.25, num_classes=5)
    # both normalize to 1.0 at pixel 0
    seeds = extract_seeds({1: a, 2: b}, ImageLabels((1, 2)), _uniform_sal(2, 2), cfg)
    assert seeds.data[0, 0] == 1


def test_extract_seeds_tie_at_cutoff_prefers_lower_index():
    cam = Cam(np.array([[3.0, 3.0], [3.0, 0.0]]))
    cfg = GrowConfig(seed_fraction=0.25, num_classes=5)
    seeds = extract_seeds({4: cam}, ImageLabels((4,)), _uniform_sal(2, 2), cfg)
    assert seeds.data[0, 0] == 4
    assert (seeds.data.reshape(-1)[1:] != 4).all()


def test_extract_seeds_shift_invariance():
    rng = np.random.default_rng(9)
    values = rng.normal(size=(4, 5))
    sal = _uniform_sal(4, 5, 0.5)
    cfg = GrowConfig(num_classes=5)
    base = extract_seeds({3: Cam(values)}, ImageLabels((3,)), sal, cfg)
    shifted = extract_seeds({3: Cam(values + 123.5)}, ImageLabels((3,)), sal, cfg)
    assert np.array_equal(base.data == 3, shifted.data == 3)


def test_extract_seeds_budget_and_label_subset():
    rng = np.random.default_rng(13)
    h, w = 8, 9
    n = h * w
    cfg = GrowConfig(seed_fraction=0.2, num_classes=6)
    cams = {c: Cam(rng.normal(size=(h, w))) for c in (1, 4, 6)}
    sal = SaliencyMap(rng.uniform(0, 1, size=(h, w)))
    seeds = extract_seeds(cams, ImageLabels((1, 4, 6)), sal, cfg)
    budget = -(-n // 5)  # ceil(0.2 n)
    for c in (1, 4, 6):
        assert np.count_nonzero(seeds.data == c) <= budget
    assert set(np.unique(seeds.data)) <= {0, 1, 4, 6, 255}


def test_extract_seeds_deterministic():
    rng = np.random.default_rng(21)
    cams = {1: Cam(rng.normal(size=(5, 5))), 2: Cam(rng.normal(size=(5, 5)))}
    sal = SaliencyMap(rng.uniform(0, 1, size=(5, 5)))
    cfg = GrowConfig(num_classes=4)
    first = extract_seeds(cams, ImageLabels((1, 2)), sal, cfg)
    repeats = {
        extract_seeds(cams, ImageLabels((1, 2)), sal, cfg).data.tobytes()
        for _ in range(5)
    }
    assert repeats == {first.data.tobytes()}


def test_extract_seeds_missing_cam_and_dims():
    sal = _uniform_sal(2, 2)
    cfg = GrowConfig(num_classes=5)
    with pytest.raises(MissingCam):
        extract_seeds({}, ImageLabels((1,)), sal, cfg)
    with pytest.raises(DimensionMismatch):
        extract_seeds({1: Cam(np.zeros((3, 3)))}, ImageLabels((1,)), sal, cfg)
