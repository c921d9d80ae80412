from hyperlambda.utils.parallel_utils import parallel_map, spawn_generators


def _square(x):
    return x * x


def test_streams_depend_only_on_seed_and_index():
    first = [g.random() for g in spawn_generators(7, 4)]
    second = [g.random() for g in spawn_generators(7, 4)]
    more = [g.random() for g in spawn_generators(7, 6)]
    assert first == second
    assert first == more[:4]
    assert len(set(first)) == 4


def test_parallel_map_keeps_order():
    items = list(range(20))
    assert parallel_map(_square, items, jobs=1) == [x * x for x in items]
    assert parallel_map(_square, items, jobs=3) == [x * x for x in items]
    assert parallel_map(_square, [], jobs=3) == []
