"""Hot loops for the exhaustive sweeps and the rasterizer.

Every kernel works on exact integers: rationals are pre-scaled to a common
denominator so equality and the half-plane tests are integer comparisons.
Each kernel has a numba implementation and a vectorized numpy one with the
same signature.  ``EGYPTFRAC_NUMBA=0`` (or numba being absent) selects numpy.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


def numba_enabled() -> bool:
    return HAS_NUMBA and os.environ.get("EGYPTFRAC_NUMBA", "1").strip() not in ("0", "false", "no")


SIERPINSKI = 0
SNOWFLAKE = 1

# child translations in units of the cell size: Sierpinski t in {0, 1}^2,
# snowflake v_i * 3 for v_0 .. v_6
SIERPINSKI_SHIFTS = np.array([[0, 0], [1, 0], [0, 1]], dtype=np.int64)
SNOWFLAKE_SHIFTS = np.array(
    [[0, 0], [1, 0], [0, 1], [1, -1], [-1, 0], [0, -1], [-1, 1]], dtype=np.int64
)


# --- Z2 linearity sweep -------------------------------------------------------


@njit(cache=True)
def _sum2_sweep_nb(S, lo, hi, cap):
    m = S.shape[0]
    linear = 0
    nviol = 0
    viol = np.zeros((cap, 2), dtype=np.int64)
    for i in range(lo, hi):
        si = S[i]
        for k in range(m):
            lin = si + S[k] == S[i ^ k]
            empty = (i & k) == 0
            if lin:
                linear += 1
            if lin != empty:
                if nviol < cap:
                    viol[nviol, 0] = i
                    viol[nviol, 1] = k
                nviol += 1
    return linear, nviol, viol[: min(nviol, cap)]


def _sum2_sweep_np(S, lo, hi, cap):
    m = S.shape[0]
    ks = np.arange(m, dtype=np.int64)
    linear = 0
    nviol = 0
    found = []
    block = max(1, (1 << 18) // max(m, 1))
    for start in range(lo, hi, block):
        rows = np.arange(start, min(start + block, hi), dtype=np.int64)[:, None]
        lin = (S[rows] + S[ks][None, :]) == S[rows ^ ks[None, :]]
        empty = (rows & ks[None, :]) == 0
        linear += int(lin.sum())
        bad = np.argwhere(lin != empty)
        nviol += len(bad)
        if len(found) < cap and len(bad):
            bad[:, 0] += start
            found.extend(bad[: cap - len(found)].tolist())
    viol = np.array(found, dtype=np.int64).reshape(-1, 2)
    return linear, nviol, viol


def sum2_sweep(S, lo, hi, cap=64):
    """Count pairs (i, k), lo <= i < hi, with S[i] + S[k] == S[i ^ k].

    A violation is a pair where that equality disagrees with ``i & k == 0``.
    Returns ``(linear_count, violation_count, first_violations)``.
    """
    fn = _sum2_sweep_nb if numba_enabled() else _sum2_sweep_np
    linear, nviol, viol = fn(np.ascontiguousarray(S, dtype=np.int64), lo, hi, cap)
    return int(linear), int(nviol), viol


# --- Z3 linearity sweep -------------------------------------------------------


@njit(cache=True)
def _sum3_sweep_nb(D, S, W, lo, hi, cap):
    m, n = D.shape
    # checked, linear, z_empty, viol_a, viol_b, converse, sigma_z_zero_nonempty
    stats = np.zeros(7, dtype=np.int64)
    viol = np.zeros((cap, 3), dtype=np.int64)
    nv = 0
    for i in range(lo, hi):
        for k in range(m):
            rhs = 0
            sz = 0
            empty = True
            for j in range(n):
                a = D[i, j]
                b = D[k, j]
                s = a + b
                if s == 2:
                    s = -1
                elif s == -2:
                    s = 1
                rhs += s * W[j]
                if a == b and a != 0:
                    empty = False
                    sz += a * W[j]
            lin = S[i] + S[k] == rhs
            stats[0] += 1
            if lin:
                stats[1] += 1
            if empty:
                stats[2] += 1
            kind = 0
            if empty and not lin:
                stats[3] += 1
                kind = 1
            if lin and sz != 0:
                stats[4] += 1
                kind = 2
            if not empty and sz == 0:
                stats[6] += 1
                if not lin:
                    stats[5] += 1
            if kind != 0:
                if nv < cap:
                    viol[nv, 0] = i
                    viol[nv, 1] = k
                    viol[nv, 2] = kind
                nv += 1
    return stats, viol[: min(nv, cap)]


def _sum3_sweep_np(D, S, W, lo, hi, cap):
    m = D.shape[0]
    stats = np.zeros(7, dtype=np.int64)
    found = []
    Dw = D.astype(np.int64)
    for i in range(lo, hi):
        row = Dw[i][None, :]
        bal = (row + Dw + 1) % 3 - 1
        rhs = bal @ W
        agree = (row == Dw) & (Dw != 0)
        empty = ~agree.any(axis=1)
        sz = (agree * row) @ W
        lin = (S[i] + S) == rhs
        va = empty & ~lin
        vb = lin & (sz != 0)
        zero_nonempty = ~empty & (sz == 0)
        stats += [m, lin.sum(), empty.sum(), va.sum(), vb.sum(),
                  (zero_nonempty & ~lin).sum(), zero_nonempty.sum()]
        if len(found) < cap:
            kinds = np.where(vb, 2, np.where(va, 1, 0))
            for k in np.flatnonzero(kinds):
                if len(found) < cap:
                    found.append((i, int(k), int(kinds[k])))
    return stats, np.array(found, dtype=np.int64).reshape(-1, 3)


def sum3_sweep(D, S, W, lo, hi, cap=64):
    """Balanced-ternary analogue of :func:`sum2_sweep`.

    ``D`` holds digit rows, ``S[i] = D[i] @ W`` and ``W[j] = L / (j + 2)`` for
    a common multiple ``L``.  Returns ``(stats, violations)`` with stats
    ``[checked, linear, z_empty, viol_a, viol_b, converse_hits, sigma_z_zero]``
    and violation rows ``(i, k, kind)``, kind 1 = part (a), 2 = part (b).
    """
    fn = _sum3_sweep_nb if numba_enabled() else _sum3_sweep_np
    stats, viol = fn(
        np.ascontiguousarray(D, dtype=np.int8),
        np.ascontiguousarray(S, dtype=np.int64),
        np.ascontiguousarray(W, dtype=np.int64),
        lo,
        hi,
        cap,
    )
    return [int(v) for v in stats], viol


# --- admissible pair listings (clouds) ---------------------------------------


@njit(cache=True)
def _linear_pairs2_nb(S):
    m = S.shape[0]
    count = 0
    for i in range(m):
        for k in range(m):
            if S[i] + S[k] == S[i ^ k]:
                count += 1
    out = np.empty((count, 2), dtype=np.int64)
    c = 0
    for i in range(m):
        for k in range(m):
            if S[i] + S[k] == S[i ^ k]:
                out[c, 0] = i
                out[c, 1] = k
                c += 1
    return out


def _linear_pairs2_np(S):
    m = S.shape[0]
    ks = np.arange(m, dtype=np.int64)
    chunks = []
    for i in range(m):
        hit = np.flatnonzero(S[i] + S == S[i ^ ks])
        chunks.append(np.column_stack([np.full(len(hit), i, dtype=np.int64), hit]))
    return np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)


def linear_pairs2(S):
    """All index pairs passing the Z2 linearity test, lexicographic."""
    fn = _linear_pairs2_nb if numba_enabled() else _linear_pairs2_np
    return fn(np.ascontiguousarray(S, dtype=np.int64))


@njit(cache=True)
def _zempty_pairs3_nb(D, S, W):
    m, n = D.shape
    keep = np.zeros((m, m), dtype=np.bool_)
    count = 0
    for i in range(m):
        for k in range(m):
            rhs = 0
            empty = True
            for j in range(n):
                a = D[i, j]
                b = D[k, j]
                if a == b and a != 0:
                    empty = False
                    break
                rhs += (a + b) * W[j]
            if empty and S[i] + S[k] == rhs:
                keep[i, k] = True
                count += 1
    out = np.empty((count, 2), dtype=np.int64)
    c = 0
    for i in range(m):
        for k in range(m):
            if keep[i, k]:
                out[c, 0] = i
                out[c, 1] = k
                c += 1
    return out


def _zempty_pairs3_np(D, S, W):
    Dw = D.astype(np.int64)
    chunks = []
    for i in range(Dw.shape[0]):
        row = Dw[i][None, :]
        empty = ~((row == Dw) & (Dw != 0)).any(axis=1)
        rhs = ((row + Dw + 1) % 3 - 1) @ W
        hit = np.flatnonzero(empty & ((S[i] + S) == rhs))
        chunks.append(np.column_stack([np.full(len(hit), i, dtype=np.int64), hit]))
    return np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)


def zempty_pairs3(D, S, W):
    """Index pairs with empty agreement vector that also pass the Z3 linearity test."""
    fn = _zempty_pairs3_nb if numba_enabled() else _zempty_pairs3_np
    return fn(
        np.ascontiguousarray(D, dtype=np.int8),
        np.ascontiguousarray(S, dtype=np.int64),
        np.ascontiguousarray(W, dtype=np.int64),
    )


# --- approximant membership on integer-scaled points -------------------------


@njit(cache=True)
def _in_t0(x, y, d):
    return x >= 0 and y >= 0 and x + y <= d


@njit(cache=True)
def _in_square(x, y, d):
    return 2 * abs(x) <= d and 2 * abs(y) <= d


@njit(cache=True)
def _in_h0(x, y, d):
    if not _in_square(x, y, d) or 2 * abs(x + y) > d:
        return False
    if 6 * x > d and 6 * y > d and 2 * (x + y) < d:
        return False
    if 6 * x < -d and 6 * y < -d and 2 * (x + y) > -d:
        return False
    return True


@njit(cache=True)
def _member_grid_nb(X, Y, d, depth, kind):
    n = X.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    if kind == SIERPINSKI:
        shifts = SIERPINSKI_SHIFTS
        scale = 2
    else:
        shifts = SNOWFLAKE_SHIFTS
        scale = 3
    nchild = shifts.shape[0]
    size = depth * nchild + 2
    sx = np.empty(size, dtype=np.int64)
    sy = np.empty(size, dtype=np.int64)
    sl = np.empty(size, dtype=np.int64)
    for p in range(n):
        x = X[p]
        y = Y[p]
        if kind == SIERPINSKI:
            if not _in_t0(x, y, d):
                continue
        elif not _in_square(x, y, d):
            continue
        top = 0
        sx[0] = x
        sy[0] = y
        sl[0] = depth
        top = 1
        found = False
        while top > 0 and not found:
            top -= 1
            cx = sx[top]
            cy = sy[top]
            lv = sl[top]
            if lv == 0:
                if kind == SIERPINSKI:
                    found = True  # already pruned to T0
                elif _in_h0(cx, cy, d):
                    found = True
                continue
            for c in range(nchild - 1, -1, -1):
                qx = scale * cx - shifts[c, 0] * d
                qy = scale * cy - shifts[c, 1] * d
                if kind == SIERPINSKI:
                    ok = _in_t0(qx, qy, d)
                else:
                    ok = _in_square(qx, qy, d)
                if ok:
                    sx[top] = qx
                    sy[top] = qy
                    sl[top] = lv - 1
                    top += 1
        out[p] = found
    return out


def _member_grid_np(X, Y, d, depth, kind):
    X = np.asarray(X, dtype=np.int64)
    Y = np.asarray(Y, dtype=np.int64)
    n = X.shape[0]
    if kind == SIERPINSKI:
        shifts, scale = SIERPINSKI_SHIFTS, 2

        def inside(x, y):
            return (x >= 0) & (y >= 0) & (x + y <= d)
    else:
        shifts, scale = SNOWFLAKE_SHIFTS, 3

        def inside(x, y):
            return (2 * np.abs(x) <= d) & (2 * np.abs(y) <= d)

    keep = inside(X, Y)
    owner = np.flatnonzero(keep)
    cx, cy = X[keep], Y[keep]
    for _ in range(depth):
        qx = scale * cx[:, None] - shifts[None, :, 0] * d
        qy = scale * cy[:, None] - shifts[None, :, 1] * d
        ok = inside(qx, qy)
        rows, _cols = np.nonzero(ok)
        owner = owner[rows]
        cx, cy = qx[ok], qy[ok]
    if kind == SNOWFLAKE:
        ok = (
            (2 * np.abs(cx + cy) <= d)
            & ~((6 * cx > d) & (6 * cy > d) & (2 * (cx + cy) < d))
            & ~((6 * cx < -d) & (6 * cy < -d) & (2 * (cx + cy) > -d))
        )
        owner = owner[ok]
    out = np.zeros(n, dtype=bool)
    out[owner] = True
    return out


def member_grid(X, Y, d, depth, kind):
    """Approximant membership of the points ``(X[p] / d, Y[p] / d)``.

    Points outside the fractal's bounding region are simply non-members.
    """
    fn = _member_grid_nb if numba_enabled() else _member_grid_np
    return fn(
        np.ascontiguousarray(X, dtype=np.int64),
        np.ascontiguousarray(Y, dtype=np.int64),
        int(d),
        int(depth),
        int(kind),
    )
