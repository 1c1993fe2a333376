# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see ``_speedups_py`` for the reference
implementation and the documented contract.  Signatures and results are
identical."""

from libc.stdlib cimport free, malloc


cdef struct FlatLists:
    int* data
    int* off
    int n


cdef FlatLists _flatten(lists) except *:
    cdef FlatLists fl
    cdef int total = 0
    cdef int i, j
    for sub in lists:
        total += len(sub)
    fl.n = len(lists)
    fl.data = <int*> malloc(sizeof(int) * (total if total else 1))
    fl.off = <int*> malloc(sizeof(int) * (fl.n + 1))
    if fl.data == NULL or fl.off == NULL:
        raise MemoryError()
    i = 0
    j = 0
    fl.off[0] = 0
    for sub in lists:
        for v in sub:
            fl.data[j] = v
            j += 1
        i += 1
        fl.off[i] = j
    return fl


def enumerate_relation_masks(int n_pairs, paths, min_w, int max_w, int k,
                             bint zero_discrete):
    cdef int n_edges = len(min_w)
    cdef int w[64]
    cdef int lo[64]
    cdef int e, p, d, t
    cdef bint ok
    cdef unsigned long long mask
    cdef FlatLists fp = _flatten(paths)
    for e in range(n_edges):
        lo[e] = min_w[e]
        w[e] = lo[e]
    masks = set()
    try:
        while True:
            mask = 0
            ok = True
            for p in range(n_pairs):
                d = 0
                for t in range(fp.off[p], fp.off[p + 1]):
                    d += w[fp.data[t]]
                if d == k:
                    mask |= (<unsigned long long> 1) << p
                elif d == 0 and zero_discrete:
                    ok = False
                    break
            if ok:
                masks.add(mask)
            e = 0
            while e < n_edges and w[e] == max_w:
                w[e] = lo[e]
                e += 1
            if e == n_edges:
                return masks
            w[e] += 1
    finally:
        free(fp.data)
        free(fp.off)


def matching_weightings(int n_pairs, paths, min_w, int max_w, int k,
                        bint zero_discrete, object target):
    cdef int n_edges = len(min_w)
    cdef int w[64]
    cdef int lo[64]
    cdef int e, p, d, t
    cdef bint ok
    cdef unsigned long long mask
    cdef unsigned long long tgt = target
    cdef FlatLists fp = _flatten(paths)
    for e in range(n_edges):
        lo[e] = min_w[e]
        w[e] = lo[e]
    found = []
    try:
        while True:
            mask = 0
            ok = True
            for p in range(n_pairs):
                d = 0
                for t in range(fp.off[p], fp.off[p + 1]):
                    d += w[fp.data[t]]
                if d == k:
                    mask |= (<unsigned long long> 1) << p
                elif d == 0 and zero_discrete:
                    ok = False
                    break
            if ok and mask == tgt:
                found.append(tuple([w[e] for e in range(n_edges)]))
            e = 0
            while e < n_edges and w[e] == max_w:
                w[e] = lo[e]
                e += 1
            if e == n_edges:
                return found
            w[e] += 1
    finally:
        free(fp.data)
        free(fp.off)


def enumerate_rooted_arc_masks(int n_leaves, pair_index, paths, min_w,
                               int max_w, int k, bint zero_discrete,
                               bint canonical_only, interior_roots,
                               edge_roots):
    cdef int n_edges = len(min_w)
    cdef int n_pairs = len(paths)
    cdef int n_interior = len(interior_roots)
    cdef int w[64]
    cdef int lo[64]
    cdef int pd[64]
    cdef int dr[16]
    cdef int base[16]
    cdef int pidx[16][16]
    cdef int uleaf[64]
    cdef int vleaf[64]
    cdef int sides[64][16]
    cdef int e, p, d, t, x, y, r, a, we, ei
    cdef bint ok
    cdef FlatLists fp = _flatten(paths)
    # per interior vertex: n_leaves consecutive lists of edge indices
    flat_ir = [lst for rts in interior_roots for lst in rts]
    cdef FlatLists fir = _flatten(flat_ir)
    cdef FlatLists fnear = _flatten([er[3][x] for er in edge_roots
                                     for x in range(n_leaves)])
    for e in range(n_edges):
        lo[e] = min_w[e]
        w[e] = lo[e]
        uleaf[e] = 1 if edge_roots[e][0] else 0
        vleaf[e] = 1 if edge_roots[e][1] else 0
        for x in range(n_leaves):
            sides[e][x] = edge_roots[e][2][x]
    for x in range(n_leaves):
        for y in range(n_leaves):
            pidx[x][y] = pair_index[x][y]
    masks = set()
    try:
        while True:
            ok = True
            for p in range(n_pairs):
                d = 0
                for t in range(fp.off[p], fp.off[p + 1]):
                    d += w[fp.data[t]]
                pd[p] = d
                if d == 0 and zero_discrete:
                    ok = False
                    break
            if ok:
                for r in range(n_interior):
                    for x in range(n_leaves):
                        d = 0
                        for t in range(fir.off[r * n_leaves + x],
                                       fir.off[r * n_leaves + x + 1]):
                            d += w[fir.data[t]]
                        dr[x] = d
                    masks.add(_arc_mask_c(n_leaves, pidx, pd, dr, k))
                for ei in range(n_edges):
                    we = w[ei]
                    for x in range(n_leaves):
                        d = 0
                        for t in range(fnear.off[ei * n_leaves + x],
                                       fnear.off[ei * n_leaves + x + 1]):
                            d += w[fnear.data[t]]
                        base[x] = d
                    for a in range(we + 1):
                        if canonical_only and a == 0 and not uleaf[ei]:
                            continue
                        if canonical_only and a == we and not vleaf[ei]:
                            continue
                        for x in range(n_leaves):
                            dr[x] = base[x] + (a if sides[ei][x] else we - a)
                        masks.add(_arc_mask_c(n_leaves, pidx, pd, dr, k))
            e = 0
            while e < n_edges and w[e] == max_w:
                w[e] = lo[e]
                e += 1
            if e == n_edges:
                return masks
            w[e] += 1
    finally:
        free(fp.data)
        free(fp.off)
        free(fir.data)
        free(fir.off)
        free(fnear.data)
        free(fnear.off)


cdef object _arc_mask_c(int n_leaves, int pidx[16][16], int* pd, int* dr, int k):
    cdef unsigned long long mask = 0
    cdef int x, y
    for x in range(n_leaves):
        for y in range(n_leaves):
            if x != y and pd[pidx[x][y]] == k and dr[y] == dr[x] + k:
                mask |= (<unsigned long long> 1) << (x * n_leaves + y)
    return mask
