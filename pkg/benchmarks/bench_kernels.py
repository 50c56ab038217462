"""Time the numba and numpy kernel backends on the acceptance-size workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends must return identical results; the script checks that before
printing timings.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from egyptfrac import _kernels as K
from egyptfrac import tables
from egyptfrac.render import RenderJob, pixel_centers


def _workloads():
    S2 = tables.scaled_sigmas(2, 10)
    D3 = tables.digit_table(3, 6)
    S3 = tables.scaled_sigmas(3, 6)
    _, W3 = tables.sigma_weights(6)
    S2s = tables.scaled_sigmas(2, 8)
    sx, sy, sd = pixel_centers(RenderJob("sierpinski", 9, "pgm", 512))
    gx, gy, gd = pixel_centers(RenderJob("snowflake", 5, "pgm", 243))
    return [
        ("sum2_sweep N=10", K._sum2_sweep_nb, K._sum2_sweep_np, (S2, 0, len(S2), 64)),
        ("sum3_sweep N=6", K._sum3_sweep_nb, K._sum3_sweep_np, (D3, S3, W3, 0, len(S3), 64)),
        ("linear_pairs2 N=8", K._linear_pairs2_nb, K._linear_pairs2_np, (S2s,)),
        ("zempty_pairs3 N=6", K._zempty_pairs3_nb, K._zempty_pairs3_np, (D3, S3, W3)),
        ("member_grid sierpinski 512px d=9", K._member_grid_nb, K._member_grid_np,
         (sx, sy, sd, 9, K.SIERPINSKI)),
        ("member_grid snowflake 243px d=5", K._member_grid_nb, K._member_grid_np,
         (gx, gy, gd, 5, K.SNOWFLAKE)),
    ]


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def _best(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':36} {'numba s':>9} {'numpy s':>9} {'speedup':>8}")
    for name, nb, npy, kargs in _workloads():
        ref = nb(*kargs)  # also triggers compilation
        if not _same(ref, npy(*kargs)):
            raise SystemExit(f"{name}: backends disagree")
        t_nb = _best(nb, kargs, args.repeat)
        t_np = _best(npy, kargs, args.repeat)
        print(f"{name:36} {t_nb:9.4f} {t_np:9.4f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
