"""Hot loops on the integer lattice.

All kernels take integer coordinate arrays ``X, Y`` (see
:attr:`tripts.geometry.PointSet.lattice`). Quantities of the form
``a + b*sqrt(3)`` are carried as integer pairs and compared with an exact sign
test, so results are identical on every path.

Each kernel has two implementations:

* ``*_loop``: explicit loops, compiled with numba when it is enabled;
* ``*_numpy``: vectorised numpy, which also accepts ``dtype=object`` arrays
  (arbitrary-precision Python ints) for coordinates too large for int64.

The public wrappers pick one; ``backend`` can force ``"numba"`` or ``"numpy"``.
"""
from __future__ import annotations

import numpy as np

from ._accel import NUMBA_ENABLED, njit

__all__ = [
    "cone_minimum_winners",
    "oracle_edges",
    "first_crossing",
    "first_pair_without_triangle_path",
    "resolve_backend",
]


def _py(fn):
    """Uncompiled body of a kernel (runs on object arrays of Python ints)."""
    return getattr(fn, "py_func", fn)


def resolve_backend(X, backend: str | None = None) -> str:
    if backend is None:
        backend = "numba" if NUMBA_ENABLED else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown kernel backend {backend!r}")
    if X.dtype == object:
        return "numpy"
    return backend


# ---------------------------------------------------------------------------
# scalar helpers (compiled)


@njit(cache=True)
def _sign_ab(a, b):
    if a >= 0 and b >= 0:
        if a > 0 or b > 0:
            return 1
        return 0
    if a <= 0 and b <= 0:
        return -1
    d = a * a - 3 * b * b
    s = 0
    if d > 0:
        s = 1
    elif d < 0:
        s = -1
    if a > 0:
        return s
    return -s


@njit(cache=True)
def _sextant(dx, dy):
    s0 = 0
    if dy > 0:
        s0 = 1
    elif dy < 0:
        s0 = -1
    s60 = _sign_ab(-dy, dx)
    s120 = _sign_ab(dy, dx)
    if s0 == 0 or s60 == 0 or s120 == 0:
        return 0
    if s0 > 0:
        if s60 > 0:
            return 1
        if s120 > 0:
            return 2
        return 3
    if s60 < 0:
        return 4
    if s120 > 0:
        return 6
    return 5


@njit(cache=True)
def _proj2(s, dx, dy):
    # twice the projection on the sextant bisector, as (a, b) of a + b*sqrt3
    if s == 1:
        return dy, dx
    if s == 2:
        return 2 * dy, dx - dx
    if s == 3:
        return dy, -dx
    if s == 4:
        return -dy, -dx
    if s == 5:
        return -2 * dy, dx - dx
    return -dy, dx


@njit(cache=True)
def _slot(s, down):
    # negative cones (down graph): A4 -> C̄1, A6 -> C̄2, A2 -> C̄3
    if down:
        if s == 4:
            return 0
        if s == 6:
            return 1
        if s == 2:
            return 2
        return -1
    if s == 1:
        return 0
    if s == 3:
        return 1
    if s == 5:
        return 2
    return -1


# ---------------------------------------------------------------------------
# cone-minimum construction


@njit(cache=True)
def cone_minimum_loop(X, Y, down):
    n = X.shape[0]
    win = np.full((n, 3), -1, np.int64)
    besta = np.zeros((n, 3), X.dtype)
    bestb = np.zeros((n, 3), X.dtype)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            dx = X[j] - X[i]
            dy = Y[j] - Y[i]
            s = _sextant(dx, dy)
            if s == 0:
                return win, i, j
            k = _slot(s, down)
            if k < 0:
                continue
            a, b = _proj2(s, dx, dy)
            if win[i, k] < 0:
                win[i, k] = j
                besta[i, k] = a
                bestb[i, k] = b
            else:
                c = _sign_ab(a - besta[i, k], b - bestb[i, k])
                if c == 0:
                    return win, i, j
                if c < 0:
                    win[i, k] = j
                    besta[i, k] = a
                    bestb[i, k] = b
    return win, -1, -1


def _sign_ab_np(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    mag = (a * a > 3 * b * b).astype(np.int64) - (a * a < 3 * b * b).astype(np.int64)
    both_pos = (a >= 0) & (b >= 0)
    both_neg = (a <= 0) & (b <= 0)
    nonzero = ((a != 0) | (b != 0)).astype(np.int64)
    mixed = np.where(a > 0, mag, -mag)
    return np.where(both_pos, nonzero, np.where(both_neg, -nonzero, mixed))


def _sextant_np(dx, dy):
    s0 = (dy > 0).astype(np.int64) - (dy < 0).astype(np.int64)
    s60 = _sign_ab_np(-dy, dx)
    s120 = _sign_ab_np(dy, dx)
    upper = np.where(s60 > 0, 1, np.where(s120 > 0, 2, 3))
    lower = np.where(s60 < 0, 4, np.where(s120 > 0, 6, 5))
    out = np.where(s0 > 0, upper, lower)
    out[(s0 == 0) | (s60 == 0) | (s120 == 0)] = 0
    return out


def _proj2_np(s, dx, dy):
    zero = dx - dx
    a = np.select([s == 1, s == 2, s == 3, s == 4, s == 5], [dy, 2 * dy, dy, -dy, -2 * dy], -dy)
    b = np.select([s == 1, s == 2, s == 3, s == 4, s == 5], [dx, zero, -dx, -dx, zero], dx)
    return a, b


_DOWN_SEXTANTS = (4, 6, 2)
_UP_SEXTANTS = (1, 3, 5)


def cone_minimum_numpy(X, Y, down):
    n = X.shape[0]
    win = np.full((n, 3), -1, np.int64)
    if n < 2:
        return win, -1, -1
    dx = X[None, :] - X[:, None]
    dy = Y[None, :] - Y[:, None]
    s = _sextant_np(dx, dy)
    np.fill_diagonal(s, -1)
    bad = np.argwhere(s == 0)
    if len(bad):
        return win, int(bad[0][0]), int(bad[0][1])
    a, b = _proj2_np(s, dx, dy)
    sextants = _DOWN_SEXTANTS if down else _UP_SEXTANTS
    for i in range(n):
        for k, sx in enumerate(sextants):
            cand = np.flatnonzero(s[i] == sx)
            if len(cand) == 0:
                continue
            ca, cb = a[i, cand], b[i, cand]
            # cand[r] is the minimum iff no other candidate is strictly smaller
            cmp = _sign_ab_np(ca[:, None] - ca[None, :], cb[:, None] - cb[None, :])
            np.fill_diagonal(cmp, -1)
            if (cmp == 0).any():
                r, c = np.argwhere(cmp == 0)[0]
                return win, i, int(cand[c])
            is_min = (cmp < 0).sum(axis=1) == len(cand)
            win[i, k] = cand[np.flatnonzero(is_min)[0]]
    return win, -1, -1


def cone_minimum_winners(X, Y, down: bool, backend: str | None = None):
    """Per-point winner of each of the three cones (``-1`` where a cone is empty).

    Returns ``(winners, bad)`` where ``bad`` is ``None`` or a pair of indices
    that violates general position (boundary ray or projection tie).
    """
    if resolve_backend(X, backend) == "numba":
        win, i, j = cone_minimum_loop(X, Y, bool(down))
    else:
        win, i, j = cone_minimum_numpy(X, Y, bool(down))
    return win, (None if i < 0 else (int(i), int(j)))


# ---------------------------------------------------------------------------
# brute-force empty-triangle oracle


def _forms(X, Y, down):
    # doubled <v, u_k> for the outward normals of a down-triangle:
    # u0 = (0, 1), u1 = (-sqrt3/2, -1/2), u2 = (sqrt3/2, -1/2)
    zero = X - X
    fa = np.stack([2 * Y, -Y, -Y])
    fb = np.stack([zero, -X, X])
    if not down:
        fa, fb = -fa, -fb
    return fa, fb


@njit(cache=True)
def oracle_loop(FA, FB):
    n = FA.shape[1]
    out = np.empty((max(n * (n - 1) // 2, 1), 2), np.int64)
    cnt = 0
    ta = np.zeros(3, FA.dtype)
    tb = np.zeros(3, FA.dtype)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(3):
                if _sign_ab(FA[k, i] - FA[k, j], FB[k, i] - FB[k, j]) >= 0:
                    ta[k] = FA[k, i]
                    tb[k] = FB[k, i]
                else:
                    ta[k] = FA[k, j]
                    tb[k] = FB[k, j]
            empty = True
            for r in range(n):
                if r == i or r == j:
                    continue
                inside = True
                for k in range(3):
                    if _sign_ab(FA[k, r] - ta[k], FB[k, r] - tb[k]) > 0:
                        inside = False
                        break
                if inside:
                    empty = False
                    break
            if empty:
                out[cnt, 0] = i
                out[cnt, 1] = j
                cnt += 1
    return out[:cnt]


def _supports_np(FA, FB, i, js):
    """Supports of the smallest triangles spanned by ``i`` and each of ``js``."""
    ia, ib = FA[:, i][:, None], FB[:, i][:, None]
    ja, jb = FA[:, js], FB[:, js]
    take_i = _sign_ab_np(ia - ja, ib - jb) >= 0
    return np.where(take_i, ia, ja), np.where(take_i, ib, jb)


def oracle_numpy(FA, FB):
    n = FA.shape[1]
    edges = []
    for i in range(n - 1):
        js = np.arange(i + 1, n)
        ta, tb = _supports_np(FA, FB, i, js)  # (3, m)
        # inside[k, m, r]: point r within support k of triangle (i, js[m])
        inside = _sign_ab_np(FA[:, None, :] - ta[:, :, None], FB[:, None, :] - tb[:, :, None]) <= 0
        inside = inside.all(axis=0)
        inside[:, i] = False
        inside[np.arange(len(js)), js] = False
        for j in js[~inside.any(axis=1)]:
            edges.append((i, int(j)))
    return np.array(edges, dtype=np.int64).reshape(-1, 2)


def oracle_edges(X, Y, down: bool, backend: str | None = None):
    """Pairs ``(i, j)``, ``i < j``, whose smallest triangle holds no third point."""
    FA, FB = _forms(X, Y, bool(down))
    if resolve_backend(X, backend) == "numba":
        return oracle_loop(np.ascontiguousarray(FA), np.ascontiguousarray(FB))
    return oracle_numpy(FA, FB)


# ---------------------------------------------------------------------------
# straight-line crossings


@njit(cache=True)
def _orient(ax, ay, bx, by, cx, cy):
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


@njit(cache=True)
def _on_segment(ax, ay, bx, by, cx, cy):
    # c collinear with a-b: is it within the closed box of a-b?
    return min(ax, bx) <= cx <= max(ax, bx) and min(ay, by) <= cy <= max(ay, by)


@njit(cache=True)
def _segments_conflict(X, Y, a, b, c, d):
    # shared endpoint: conflict only if the segments overlap along a ray
    if a == c or a == d or b == c or b == d:
        if a == c:
            s, p, q = a, b, d
        elif a == d:
            s, p, q = a, b, c
        elif b == c:
            s, p, q = b, a, d
        else:
            s, p, q = b, a, c
        if p == q:
            return True
        if _orient(X[s], Y[s], X[p], Y[p], X[q], Y[q]) != 0:
            return False
        dot = (X[p] - X[s]) * (X[q] - X[s]) + (Y[p] - Y[s]) * (Y[q] - Y[s])
        return dot > 0
    o1 = _orient(X[a], Y[a], X[b], Y[b], X[c], Y[c])
    o2 = _orient(X[a], Y[a], X[b], Y[b], X[d], Y[d])
    o3 = _orient(X[c], Y[c], X[d], Y[d], X[a], Y[a])
    o4 = _orient(X[c], Y[c], X[d], Y[d], X[b], Y[b])
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_segment(X[a], Y[a], X[b], Y[b], X[c], Y[c]):
        return True
    if o2 == 0 and _on_segment(X[a], Y[a], X[b], Y[b], X[d], Y[d]):
        return True
    if o3 == 0 and _on_segment(X[c], Y[c], X[d], Y[d], X[a], Y[a]):
        return True
    if o4 == 0 and _on_segment(X[c], Y[c], X[d], Y[d], X[b], Y[b]):
        return True
    return False


@njit(cache=True)
def first_crossing_loop(X, Y, E):
    m = E.shape[0]
    for e in range(m):
        for f in range(e + 1, m):
            if _segments_conflict(X, Y, E[e, 0], E[e, 1], E[f, 0], E[f, 1]):
                return e, f
    return -1, -1


def _orient_np(ax, ay, bx, by, cx, cy):
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (v > 0).astype(np.int64) - (v < 0).astype(np.int64)


def first_crossing_numpy(X, Y, E):
    m = E.shape[0]
    if m < 2:
        return -1, -1
    a, b = E[:, 0], E[:, 1]
    A = (a[:, None], b[:, None])
    B = (a[None, :], b[None, :])
    ax, ay, bx, by = X[A[0]], Y[A[0]], X[A[1]], Y[A[1]]
    cx, cy, dx, dy = X[B[0]], Y[B[0]], X[B[1]], Y[B[1]]
    o1 = _orient_np(ax, ay, bx, by, cx, cy)
    o2 = _orient_np(ax, ay, bx, by, dx, dy)
    o3 = _orient_np(cx, cy, dx, dy, ax, ay)
    o4 = _orient_np(cx, cy, dx, dy, bx, by)

    def on_seg(px, py, qx, qy, rx, ry):
        return (
            (np.minimum(px, qx) <= rx) & (rx <= np.maximum(px, qx))
            & (np.minimum(py, qy) <= ry) & (ry <= np.maximum(py, qy))
        )

    shared = (A[0] == B[0]) | (A[0] == B[1]) | (A[1] == B[0]) | (A[1] == B[1])
    proper = (o1 * o2 < 0) & (o3 * o4 < 0)
    touch = (
        ((o1 == 0) & on_seg(ax, ay, bx, by, cx, cy))
        | ((o2 == 0) & on_seg(ax, ay, bx, by, dx, dy))
        | ((o3 == 0) & on_seg(cx, cy, dx, dy, ax, ay))
        | ((o4 == 0) & on_seg(cx, cy, dx, dy, bx, by))
    )
    conflict = ~shared & (proper | touch)
    conflict = np.triu(conflict, 1)
    # shared endpoints only conflict when collinear and overlapping
    check = _py(_segments_conflict)
    for e, f in np.argwhere(np.triu(shared, 1)):
        conflict[e, f] = check(X, Y, E[e, 0], E[e, 1], E[f, 0], E[f, 1])
    hits = np.argwhere(conflict)
    if len(hits) == 0:
        return -1, -1
    e, f = hits[0]
    return int(e), int(f)


def first_crossing(X, Y, E, backend: str | None = None):
    """First pair of edge indices whose segments meet away from a shared endpoint."""
    E = np.asarray(E, dtype=np.int64).reshape(-1, 2)
    if resolve_backend(X, backend) == "numba":
        e, f = first_crossing_loop(X, Y, E)
    else:
        e, f = first_crossing_numpy(X, Y, E)
    return None if e < 0 else (int(e), int(f))


# ---------------------------------------------------------------------------
# every pair joined by a path inside its smallest triangle


@njit(cache=True)
def triangle_paths_loop(FA, FB, indptr, indices):
    n = FA.shape[1]
    inside = np.zeros(n, np.bool_)
    seen = np.zeros(n, np.bool_)
    queue = np.empty(n, np.int64)
    ta = np.zeros(3, FA.dtype)
    tb = np.zeros(3, FA.dtype)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(3):
                if _sign_ab(FA[k, i] - FA[k, j], FB[k, i] - FB[k, j]) >= 0:
                    ta[k] = FA[k, i]
                    tb[k] = FB[k, i]
                else:
                    ta[k] = FA[k, j]
                    tb[k] = FB[k, j]
            for r in range(n):
                ok = True
                for k in range(3):
                    if _sign_ab(FA[k, r] - ta[k], FB[k, r] - tb[k]) > 0:
                        ok = False
                        break
                inside[r] = ok
                seen[r] = False
            head = 0
            tail = 1
            queue[0] = i
            seen[i] = True
            while head < tail and not seen[j]:
                v = queue[head]
                head += 1
                for t in range(indptr[v], indptr[v + 1]):
                    w = indices[t]
                    if inside[w] and not seen[w]:
                        seen[w] = True
                        queue[tail] = w
                        tail += 1
            if not seen[j]:
                return i, j
    return -1, -1


def triangle_paths_numpy(FA, FB, indptr, indices):
    n = FA.shape[1]
    for i in range(n - 1):
        js = np.arange(i + 1, n)
        ta, tb = _supports_np(FA, FB, i, js)
        inside = (_sign_ab_np(FA[:, None, :] - ta[:, :, None], FB[:, None, :] - tb[:, :, None]) <= 0).all(axis=0)
        for m, j in enumerate(js):
            allowed = inside[m]
            seen = {i}
            stack = [i]
            while stack and j not in seen:
                v = stack.pop()
                for w in indices[indptr[v]:indptr[v + 1]]:
                    w = int(w)
                    if allowed[w] and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if j not in seen:
                return i, int(j)
    return -1, -1


def first_pair_without_triangle_path(X, Y, indptr, indices, down: bool, backend: str | None = None):
    """First pair ``(p, q)`` with no ``p``-``q`` path inside their smallest triangle."""
    FA, FB = _forms(X, Y, bool(down))
    indptr = np.asarray(indptr, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    if resolve_backend(X, backend) == "numba":
        i, j = triangle_paths_loop(np.ascontiguousarray(FA), np.ascontiguousarray(FB), indptr, indices)
    else:
        i, j = triangle_paths_numpy(FA, FB, indptr, indices)
    return None if i < 0 else (int(i), int(j))
