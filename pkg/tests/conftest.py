import sys
from itertools import combinations_with_replacement
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from akblocks.partitions import INFINITY


def sweep_charges(e, r):
    """Multicharges with first entry 0, weakly increasing, spread below e
    (capped at 2 when e is infinite)."""
    cap = 2 if e == INFINITY else e - 1
    for rest in combinations_with_replacement(range(cap + 1), r - 1):
        yield (0,) + rest


def sweep_settings():
    for e in (2, 3, INFINITY):
        for r in (3, 4):
            for charge in sweep_charges(e, r):
                yield e, r, charge


@pytest.fixture(scope="session")
def desk_sweep():
    """Core data for the whole desk-scale sweep, grouped by block.

    Maps (e, r, charge) -> {block_id: [(mp, core_pair, ops, mv), ...]}
    over all multipartitions of size at most 6, with the wall-clock build
    time stored under the "elapsed" key.
    """
    import time

    from akblocks.abacus import AbacusPair
    from akblocks.blocks import block_id
    from akblocks.moves import core
    from akblocks.partitions import multipartitions_of

    start = time.perf_counter()
    sweep = {}
    for e, r, charge in sweep_settings():
        grouped = {}
        for n in range(7):
            for mp in multipartitions_of(n, r):
                pair = AbacusPair(mp, charge, e)
                bid = block_id(pair)
                core_pair, ops, mv = core(pair)
                grouped.setdefault(bid, []).append((mp, core_pair, ops, mv))
        sweep[(e, r, charge)] = grouped
    sweep["elapsed"] = time.perf_counter() - start
    return sweep
