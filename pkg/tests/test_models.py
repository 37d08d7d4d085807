import random

import numpy as np
import pytest

from relpaths.algebra import Relation
from relpaths.models import SAMPLERS, block_rng, cycle_instance, path_instance, sample, topsort_instance
from relpaths.predicates import (
    is_acyclic,
    is_bijective,
    is_cycle,
    is_injective,
    is_path,
    is_point,
    is_surjective,
    is_univalent,
    is_vector,
)

CLASS_OF = {
    "point": is_point,
    "vector": is_vector,
    "path": is_path,
    "cycle": is_cycle,
    "injuni": lambda r: is_injective(r) and is_univalent(r),
    "univalent": is_univalent,
    "injective": is_injective,
    "surjective": is_surjective,
    "bijective": is_bijective,
}


@pytest.mark.parametrize("name", sorted(CLASS_OF))
@pytest.mark.parametrize("n", [1, 2, 4, 8])
def test_sampler_stays_in_class(name, n):
    bits = sample(name, block_rng("t", name, n), n, 400)
    assert bits.dtype == np.uint64
    for b in bits:
        r = Relation(n, int(b))
        assert CLASS_OF[name](r), (name, r)


@pytest.mark.parametrize("name", sorted(SAMPLERS))
def test_sampler_is_deterministic(name):
    a = sample(name, block_rng(0, name, 5, 0), 5, 100)
    b = sample(name, block_rng(0, name, 5, 0), 5, 100)
    c = sample(name, block_rng(0, name, 5, 1), 5, 100)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c) or name == "point"


def test_sampler_bounds():
    with pytest.raises(ValueError):
        sample("rel", block_rng(0), 0, 1)
    with pytest.raises(ValueError):
        sample("rel", block_rng(0), 9, 1)


def test_path_sampler_covers_shapes():
    bits = sample("path", block_rng("shapes"), 5, 2000)
    rels = [Relation(5, int(b)) for b in bits]
    assert any(not r for r in rels)
    assert any(r and is_cycle(r) for r in rels)
    assert any(r and not is_cycle(r) for r in rels)


def test_instance_generators_meet_preconditions():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 8)
        D, x, y = path_instance(rng, n)
        assert is_acyclic(D) and is_point(x) and is_point(y) and x != y
        assert D.star() @ y <= D.T.star() @ x
        assert is_acyclic(topsort_instance(rng, n))
        assert not is_acyclic(cycle_instance(rng, n))
