"""Memoized operations must give identical answers under concurrent use."""

from concurrent.futures import ThreadPoolExecutor

from littlewood.characters import build_root_system, dim_irrep, weight_multiplicities
from littlewood.partitions import lr_coefficient, partitions_of


def test_concurrent_lr_and_dims_match_serial():
    lam = (4, 3, 1)
    jobs = []
    for k in range(9):
        for mu in partitions_of(k):
            for nu in partitions_of(8 - k):
                jobs.append((mu.parts, nu.parts))
    serial = [lr_coefficient(lam, mu, nu) for mu, nu in jobs]
    with ThreadPoolExecutor(max_workers=8) as pool:
        threaded = list(pool.map(lambda j: lr_coefficient(lam, *j), jobs))
    assert threaded == serial

    g2 = build_root_system("G", 2)
    weights = [(a, b) for a in range(4) for b in range(3)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        dims = list(pool.map(lambda fc: dim_irrep(g2, fc), weights))
        masses = list(pool.map(lambda fc: weight_multiplicities(g2, fc).dimension(), weights))
    assert dims == masses
