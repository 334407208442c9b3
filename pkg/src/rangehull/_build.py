"""Compiled construction kernels for the layered hull tree.

Points arrive sorted by (x, y); a point's rank in that order doubles as its
primary key.  Node ids are implicit: the secondary tree of primary node
``[lo, hi)`` at depth ``d`` numbers its nodes in preorder starting at
``d * 2n + 2 * lo``.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def _cross(X, Y, o, a, b):
    return (X[a] - X[o]) * (Y[b] - Y[o]) - (Y[a] - Y[o]) * (X[b] - X[o])


@njit(cache=True)
def level_orders(X, Y, depth):
    """Per-depth permutations of ranks, sorted by (y, x) within each primary node."""
    n = X.shape[0]
    key = (Y + (1 << 30)) * (1 << 31) + (X + (1 << 30))
    ys = np.empty((depth, n), np.int32)
    ys[0, :] = np.argsort(key, kind="mergesort").astype(np.int32)
    for d in range(depth - 1):
        # walk the depth-d segments; each splits at its midpoint into depth d+1
        stack = [(0, n, 0)]
        while len(stack) > 0:
            lo, hi, dd = stack.pop()
            if dd < d and hi - lo > 1:
                mid = (lo + hi) >> 1
                stack.append((lo, mid, dd + 1))
                stack.append((mid, hi, dd + 1))
                continue
            if hi - lo == 1 or dd < d:
                ys[d + 1, lo:hi] = ys[d, lo:hi]
                continue
            mid = (lo + hi) >> 1
            li = lo
            ri = mid
            for k in range(lo, hi):
                r = ys[d, k]
                if r < mid:
                    ys[d + 1, li] = r
                    li += 1
                else:
                    ys[d + 1, ri] = r
                    ri += 1
    return ys


@njit(cache=True)
def _grow_i32(a, need):
    cap = a.shape[0]
    while cap < need:
        cap *= 2
    b = np.empty(cap, a.dtype)
    b[: a.shape[0]] = a
    return b


@njit(cache=True)
def _grow_f64(a, need):
    cap = a.shape[0]
    while cap < need:
        cap *= 2
    b = np.empty(cap, a.dtype)
    b[: a.shape[0]] = a
    return b


@njit(cache=True)
def _grow_i64(a, need):
    cap = a.shape[0]
    while cap < need:
        cap *= 2
    b = np.empty(cap, a.dtype)
    b[: a.shape[0]] = a
    return b


@njit(cache=True)
def build_hulls(X, Y, ys, depth):
    """Hull of every secondary node, built bottom-up from its children's hulls.

    Returns (hv, hoff, hlen, ixmax, ixmin, iymin, poff, pp, pc, leaf_id, work).
    ``hv`` holds point ranks; ``pp``/``pc`` hold prefix perimeter and prefix
    cross sums (relative to the hull's first vertex, wrapping int64).
    """
    n = X.shape[0]
    nid = depth * 2 * n
    hoff = np.full(nid, -1, np.int64)
    hlen = np.zeros(nid, np.int32)
    ixmax = np.zeros(nid, np.int32)
    ixmin = np.zeros(nid, np.int32)
    iymin = np.zeros(nid, np.int32)
    poff = np.zeros(nid, np.int64)
    leaf_id = np.zeros(n, np.int64)
    hv = np.empty(max(16, 4 * n * depth), np.int32)
    pp = np.empty(max(16, 6 * n * depth), np.float64)
    pc = np.empty(max(16, 6 * n * depth), np.int64)
    nv = 0
    npf = 0
    work = 0
    cand = np.empty(16, np.int32)
    buf = np.empty(32, np.int32)

    pstack = [(0, n, 0)]
    while len(pstack) > 0:
        plo, phi, d = pstack.pop()
        if phi - plo > 1:
            pmid = (plo + phi) >> 1
            pstack.append((plo, pmid, d + 1))
            pstack.append((pmid, phi, d + 1))
        else:
            leaf_id[ys[d, plo]] = d * 2 * n + 2 * plo
        base = d * 2 * n + 2 * plo
        # post-order over the secondary tree; state 0 = first visit
        sstack = [(plo, phi, base, 0)]
        while len(sstack) > 0:
            a, b, nodeid, state = sstack.pop()
            if b - a > 1 and state == 0:
                mid = (a + b) >> 1
                sstack.append((a, b, nodeid, 1))
                sstack.append((mid, b, nodeid + 2 * (mid - a), 0))
                sstack.append((a, mid, nodeid + 1, 0))
                continue
            if b - a == 1:
                m = 1
                if cand.shape[0] < 1:
                    cand = np.empty(16, np.int32)
                cand[0] = ys[d, a]
                hsz = 1
                if buf.shape[0] < 2:
                    buf = np.empty(32, np.int32)
                buf[0] = cand[0]
            else:
                mid = (a + b) >> 1
                lid = nodeid + 1
                rid = nodeid + 2 * (mid - a)
                m = hlen[lid] + hlen[rid]
                if cand.shape[0] < m:
                    cand = np.empty(2 * m, np.int32)
                k = 0
                for t in range(hlen[lid]):
                    cand[k] = hv[hoff[lid] + t]
                    k += 1
                for t in range(hlen[rid]):
                    cand[k] = hv[hoff[rid] + t]
                    k += 1
                work += m
                srt = np.sort(cand[:m])
                if buf.shape[0] < 2 * m + 2:
                    buf = np.empty(4 * m + 4, np.int32)
                if m <= 2:
                    hsz = m
                    for t in range(m):
                        buf[t] = srt[t]
                else:
                    # monotone chain, strict turns only
                    hsz = 0
                    for t in range(m):
                        p = srt[t]
                        while hsz >= 2 and _cross(X, Y, buf[hsz - 2], buf[hsz - 1], p) <= 0:
                            hsz -= 1
                        buf[hsz] = p
                        hsz += 1
                    lower = hsz + 1
                    for t in range(m - 2, -1, -1):
                        p = srt[t]
                        while hsz >= lower and _cross(X, Y, buf[hsz - 2], buf[hsz - 1], p) <= 0:
                            hsz -= 1
                        buf[hsz] = p
                        hsz += 1
                    hsz -= 1
            # rotate so position 0 is max y (ties: larger x)
            top = 0
            for t in range(1, hsz):
                r = buf[t]
                s = buf[top]
                if Y[r] > Y[s] or (Y[r] == Y[s] and X[r] > X[s]):
                    top = t
            if nv + hsz > hv.shape[0]:
                hv = _grow_i32(hv, nv + hsz)
            if npf + hsz + 1 > pp.shape[0]:
                pp = _grow_f64(pp, npf + hsz + 1)
                pc = _grow_i64(pc, npf + hsz + 1)
            hoff[nodeid] = nv
            hlen[nodeid] = hsz
            poff[nodeid] = npf
            for t in range(hsz):
                hv[nv + t] = buf[(top + t) % hsz]
            bx = 0
            bn = 0
            by = 0
            for t in range(1, hsz):
                r = hv[nv + t]
                if r > hv[nv + bx]:
                    bx = t
                if r < hv[nv + bn]:
                    bn = t
                s = hv[nv + by]
                if Y[r] < Y[s] or (Y[r] == Y[s] and X[r] < X[s]):
                    by = t
            ixmax[nodeid] = bx
            ixmin[nodeid] = bn
            iymin[nodeid] = by
            o = hv[nv]
            pp[npf] = 0.0
            pc[npf] = 0
            for t in range(hsz):
                u = hv[nv + t]
                w = hv[nv + (t + 1) % hsz]
                dx = float(X[w] - X[u])
                dy = float(Y[w] - Y[u])
                pp[npf + t + 1] = pp[npf + t] + np.sqrt(dx * dx + dy * dy)
                pc[npf + t + 1] = pc[npf + t] + _cross(X, Y, o, u, w)
            nv += hsz
            npf += hsz + 1
    return (hv[:nv].copy(), hoff, hlen, ixmax, ixmin, iymin, poff,
            pp[:npf].copy(), pc[:npf].copy(), leaf_id, work)
