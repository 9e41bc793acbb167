"""Pure-Python kernels. Same signatures as the compiled ``_ckernels``."""


def rho_arrays(succ):
    """Tail/cycle skeleton of the functional graph of ``succ``.

    Returns ``(tail_len, cycle_id, cycle_len, cycle_entry, cycle_pos)``.
    Cycles are numbered by their least point; ``cycle_pos[x]`` is the
    position of ``cycle_entry[x]`` on its cycle, counted from that least
    point along ``succ``.
    """
    n = len(succ)
    state = [0] * n  # 0 new, 1 on current path, 2 done
    tail = [0] * n
    cid = [-1] * n
    entry = [0] * n
    cycles = []
    for s in range(n):
        if state[s]:
            continue
        path = []
        x = s
        while state[x] == 0:
            state[x] = 1
            path.append(x)
            x = succ[x]
        if state[x] == 1:
            # closed a new cycle at x
            k = path.index(x)
            cyc = path[k:]
            del path[k:]
            c = len(cycles)
            cycles.append(cyc)
            for y in cyc:
                state[y] = 2
                cid[y] = c
                entry[y] = y
        for y in reversed(path):
            z = succ[y]
            state[y] = 2
            tail[y] = tail[z] + 1
            cid[y] = cid[z]
            entry[y] = entry[z]
    order = sorted(range(len(cycles)), key=lambda c: min(cycles[c]))
    relabel = [0] * len(cycles)
    for new, old in enumerate(order):
        relabel[old] = new
    cycle_len = [len(cycles[old]) for old in order]
    pos_of = {}
    for old in order:
        y = start = min(cycles[old])
        i = 0
        while True:
            pos_of[y] = i
            i += 1
            y = succ[y]
            if y == start:
                break
    cid = [relabel[c] for c in cid]
    pos = [pos_of[e] for e in entry]
    return tail, cid, cycle_len, entry, pos


def component_labels(succ):
    """Union-find over the edges ``(x, succ[x])``.

    Labels are dense and ordered by the least point of each class.
    """
    n = len(succ)
    parent = list(range(n))

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    for x in range(n):
        a, b = find(x), find(succ[x])
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    labels = [0] * n
    seen = {}
    for x in range(n):
        r = find(x)
        if r not in seen:
            seen[r] = len(seen)
        labels[x] = seen[r]
    return labels


def scan_set_orbit(succ, start, target):
    """Follow ``S_k = f^k(start)`` until the first repeated state.

    ``start`` and ``target`` are bitmasks. Returns ``(t, p, hits)`` where
    ``S_t == S_{t+p}`` is the first repeat and ``hits[k]`` is 1 iff
    ``S_k`` meets ``target`` for ``k < t + p``.
    """
    bit = [1 << y for y in succ]
    seen = {}
    hits = bytearray()
    s = start
    k = 0
    while s not in seen:
        seen[s] = k
        hits.append(1 if s & target else 0)
        out = 0
        m = s
        while m:
            low = m & -m
            out |= bit[low.bit_length() - 1]
            m ^= low
        s = out
        k += 1
    t = seen[s]
    return t, k - t, bytes(hits)


def iterate(succ, x, k):
    for _ in range(k):
        x = succ[x]
    return x


def scan_point_orbit(succ, x, target):
    """Single-point version of ``scan_set_orbit``; ``target`` is a membership bytes."""
    seen = {}
    hits = bytearray()
    k = 0
    while x not in seen:
        seen[x] = k
        hits.append(target[x])
        x = succ[x]
        k += 1
    t = seen[x]
    return t, k - t, bytes(hits)
