import numpy as np
import pytest

from seedgrow import GrowConfig, HsvImage, LabelMap, SaliencyMap
from seedgrow.srg import grow_regions


@pytest.fixture(scope="session", autouse=True)
def warm_numba_kernel():
    """Compile (or load from cache) the jit kernel before any timed test."""
    img = HsvImage(np.zeros((2, 2, 3)))
    sal = SaliencyMap(np.zeros((2, 2)))
    seeds = LabelMap(np.array([[1, 255], [255, 255]], dtype=np.uint8))
    grow_regions(img, sal, seeds, GrowConfig(), backend=None)
