# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Mirrors ``_pykernels`` function for function."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef int* _as_cints(object seq, Py_ssize_t n) except NULL:
    cdef int* out = <int*> malloc(max(n, 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return out


def rho_arrays(succ):
    cdef Py_ssize_t n = len(succ)
    cdef int* s = _as_cints(succ, n)
    cdef int* state = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* tail = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* cid = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* entry = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* path = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* cmin = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* clen = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* pos = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* relabel = <int*> malloc(max(n, 1) * sizeof(int))
    cdef Py_ssize_t start, x, y, z, top, k, j
    cdef int ncyc = 0, c, m, i
    if (state == NULL or tail == NULL or cid == NULL or entry == NULL or path == NULL
            or cmin == NULL or clen == NULL or pos == NULL or relabel == NULL):
        raise MemoryError()
    try:
        memset(state, 0, n * sizeof(int))
        for start in range(n):
            if state[start]:
                continue
            top = 0
            x = start
            while state[x] == 0:
                state[x] = 1
                path[top] = <int> x
                top += 1
                x = s[x]
            if state[x] == 1:
                k = top - 1
                while path[k] != x:
                    k -= 1
                c = ncyc
                ncyc += 1
                m = path[k]
                for j in range(k, top):
                    y = path[j]
                    state[y] = 2
                    cid[y] = c
                    entry[y] = <int> y
                    tail[y] = 0
                    if y < m:
                        m = <int> y
                cmin[c] = m
                clen[c] = <int> (top - k)
                top = k
            while top > 0:
                top -= 1
                y = path[top]
                z = s[y]
                state[y] = 2
                tail[y] = tail[z] + 1
                cid[y] = cid[z]
                entry[y] = entry[z]
        # relabel cycles by least point: scanning points ascending meets minima in order
        c = 0
        for x in range(n):
            if tail[x] == 0 and cmin[cid[x]] == x:
                relabel[cid[x]] = c
                c += 1
                y = x
                i = 0
                while True:
                    pos[y] = i
                    i += 1
                    y = s[y]
                    if y == x:
                        break
        cycle_len = [0] * ncyc
        for c in range(ncyc):
            cycle_len[relabel[c]] = clen[c]
        return (
            [tail[x] for x in range(n)],
            [relabel[cid[x]] for x in range(n)],
            cycle_len,
            [entry[x] for x in range(n)],
            [pos[entry[x]] for x in range(n)],
        )
    finally:
        free(s); free(state); free(tail); free(cid); free(entry)
        free(path); free(cmin); free(clen); free(pos); free(relabel)


cdef int _find(int* parent, int a) noexcept:
    cdef int root = a, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        nxt = parent[a]
        parent[a] = root
        a = nxt
    return root


def component_labels(succ):
    cdef Py_ssize_t n = len(succ)
    cdef int* s = _as_cints(succ, n)
    cdef int* parent = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* label = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int x, a, b, r, nxt = 0
    if parent == NULL or label == NULL:
        raise MemoryError()
    try:
        for x in range(n):
            parent[x] = x
            label[x] = -1
        for x in range(n):
            a = _find(parent, x)
            b = _find(parent, s[x])
            if a < b:
                parent[b] = a
            elif b < a:
                parent[a] = b
        out = [0] * n
        for x in range(n):
            r = _find(parent, x)
            if label[r] < 0:
                label[r] = nxt
                nxt += 1
            out[x] = label[r]
        return out
    finally:
        free(s); free(parent); free(label)


def scan_set_orbit(succ, start, target):
    cdef Py_ssize_t n = len(succ)
    cdef int* s = _as_cints(succ, n)
    cdef bytearray cur = bytearray(n)
    cdef bytearray nxt = bytearray(n)
    cdef bytearray tgt = bytearray(n)
    cdef unsigned char* pc
    cdef unsigned char* pn
    cdef unsigned char* pt
    cdef Py_ssize_t i, k = 0
    cdef int hit
    try:
        pc = cur
        pt = tgt
        for i in range(n):
            pc[i] = (start >> i) & 1
            pt[i] = (target >> i) & 1
        seen = {}
        hits = bytearray()
        key = bytes(cur)
        while key not in seen:
            seen[key] = k
            pc = cur
            pn = nxt
            hit = 0
            memset(pn, 0, n)
            for i in range(n):
                if pc[i]:
                    if pt[i]:
                        hit = 1
                    pn[s[i]] = 1
            hits.append(hit)
            cur, nxt = nxt, cur
            key = bytes(cur)
            k += 1
        t = seen[key]
        return t, k - t, bytes(hits)
    finally:
        free(s)


def iterate(succ, Py_ssize_t x, Py_ssize_t k):
    cdef Py_ssize_t n = len(succ)
    cdef int* s = _as_cints(succ, n)
    cdef Py_ssize_t i
    cdef int y = <int> x
    try:
        for i in range(k):
            y = s[y]
        return y
    finally:
        free(s)


def scan_point_orbit(succ, Py_ssize_t x, const unsigned char[:] target):
    # Brent's cycle detection: touches only the orbit, no O(n) setup per call
    cdef tuple s = succ if type(succ) is tuple else tuple(succ)
    cdef Py_ssize_t power = 1, lam = 1, mu = 0, k
    cdef Py_ssize_t tortoise = x, hare = <Py_ssize_t> s[x]
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = <Py_ssize_t> s[hare]
        lam += 1
    tortoise = x
    hare = x
    for k in range(lam):
        hare = <Py_ssize_t> s[hare]
    while tortoise != hare:
        tortoise = <Py_ssize_t> s[tortoise]
        hare = <Py_ssize_t> s[hare]
        mu += 1
    cdef bytearray hits = bytearray(mu + lam)
    for k in range(mu + lam):
        hits[k] = target[x]
        x = <Py_ssize_t> s[x]
    return mu, lam, bytes(hits)
