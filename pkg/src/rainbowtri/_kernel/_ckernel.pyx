# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep and triangle kernels; twin of the pure-Python module.

Results are bit-identical with ``pure``: same counts, same lexicographic
order of reported colorings.  State lives in module-level C arrays, which is
safe because a sweep holds the GIL for its whole run and worker parallelism
uses separate processes.

Array sizes assume n <= 7 for the sweep (m <= 21 edges, completion counts
fit in 64 bits) and n <= 16 for the flat helpers.
"""

MODE_EXISTS = 0
MODE_PERVERTEX = 1
MODE_COLLECT_RFREE = 2

SWEEP_MAX_N = 7

cdef int g_n, g_m, g_mode, g_k, g_min_cd2
cdef int g_eu[21]
cdef int g_ev[21]
cdef int g_suffix[7][22]
cdef int g_cnt[7][22]
cdef int g_dc[7]
cdef int g_rcnt[7]
cdef int g_colors[21]
cdef int g_tri_n[21]
cdef int g_tri_e1[21][7]
cdef int g_tri_e2[21][7]
cdef int g_tri_w[21][7]
cdef unsigned long long g_comp[22][46]
cdef unsigned long long g_examined, g_hyp
cdef list g_counter
cdef list g_collect


cdef tuple _snapshot():
    cdef int j
    out = []
    for j in range(g_m):
        out.append(g_colors[j])
    return tuple(out)


cdef void _descend(int depth, int blocks, int rb):
    global g_examined, g_hyp
    cdef int u, v, su, sv, c, nb, i, w
    cdef int new_u, new_v, du, dv, nrb, c1, c2, nflip
    cdef unsigned long long flips
    if depth == g_m:
        g_examined += 1
        g_hyp += 1
        if g_mode == MODE_EXISTS:
            if not rb:
                g_counter.append(_snapshot())
        elif g_mode == MODE_PERVERTEX:
            for i in range(g_n):
                if g_rcnt[i] < g_k:
                    g_counter.append(_snapshot())
                    break
        else:
            g_collect.append(_snapshot())
        return
    u = g_eu[depth]
    v = g_ev[depth]
    su = g_suffix[u][depth + 1]
    sv = g_suffix[v][depth + 1]
    for c in range(blocks + 1):
        nb = blocks + 1 if c == blocks else blocks
        new_u = 1 if g_cnt[u][c] == 0 else 0
        new_v = 1 if g_cnt[v][c] == 0 else 0
        du = g_dc[u] + new_u
        dv = g_dc[v] + new_v
        if g_min_cd2 and (2 * (du + su) < g_min_cd2 or 2 * (dv + sv) < g_min_cd2):
            g_examined += g_comp[g_m - depth - 1][nb]
            continue
        nrb = rb
        flips = 0
        nflip = 0
        if g_mode == MODE_PERVERTEX:
            for i in range(g_tri_n[depth]):
                c1 = g_colors[g_tri_e1[depth][i]]
                c2 = g_colors[g_tri_e2[depth][i]]
                if c1 != c2 and c1 != c and c2 != c:
                    nrb = 1
                    w = g_tri_w[depth][i]
                    g_rcnt[w] += 1
                    flips |= (<unsigned long long>1) << w
                    nflip += 1
            g_rcnt[u] += nflip
            g_rcnt[v] += nflip
        elif not nrb:
            for i in range(g_tri_n[depth]):
                c1 = g_colors[g_tri_e1[depth][i]]
                c2 = g_colors[g_tri_e2[depth][i]]
                if c1 != c2 and c1 != c and c2 != c:
                    nrb = 1
                    break
            if nrb and g_mode == MODE_COLLECT_RFREE:
                g_examined += g_comp[g_m - depth - 1][nb]
                continue
        g_colors[depth] = c
        g_cnt[u][c] += 1
        g_cnt[v][c] += 1
        g_dc[u] = du
        g_dc[v] = dv
        _descend(depth + 1, nb, nrb)
        g_cnt[u][c] -= 1
        g_cnt[v][c] -= 1
        g_dc[u] -= new_u
        g_dc[v] -= new_v
        if nflip:
            g_rcnt[u] -= nflip
            g_rcnt[v] -= nflip
            for w in range(u):
                if flips >> w & 1:
                    g_rcnt[w] -= 1
    return


def sweep(int n, int min_cd2, int mode, int k, tuple prefix=()):
    """Compiled twin of pure.sweep; see that docstring for the contract."""
    global g_n, g_m, g_mode, g_k, g_min_cd2, g_examined, g_hyp
    global g_counter, g_collect
    if n > SWEEP_MAX_N or n < 1:
        raise ValueError(f"sweep kernel supports 1 <= n <= {SWEEP_MAX_N}, got {n}")
    cdef int m = n * (n - 1) // 2
    cdef int i, j, u, v, w, c, blocks, rb, dead, depth0
    cdef int eidx[7][7]
    cdef int cc, c1, c2
    g_n = n
    g_m = m
    g_mode = mode
    g_k = k
    g_min_cd2 = min_cd2
    depth0 = len(prefix)
    if depth0 > m:
        raise ValueError("prefix longer than the edge list")

    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            g_eu[i] = u
            g_ev[i] = v
            i += 1
    for u in range(n):
        for v in range(n):
            eidx[u][v] = -1
    for i in range(m):
        eidx[g_eu[i]][g_ev[i]] = i
    # triangles completed when edge (u, v) is assigned: {(w, u, v) : w < u}
    for i in range(m):
        u = g_eu[i]
        v = g_ev[i]
        g_tri_n[i] = u
        for w in range(u):
            g_tri_e1[i][w] = eidx[w][u]
            g_tri_e2[i][w] = eidx[w][v]
            g_tri_w[i][w] = w
    for v in range(n):
        g_suffix[v][m] = 0
    for i in range(m - 1, -1, -1):
        for v in range(n):
            g_suffix[v][i] = g_suffix[v][i + 1]
        g_suffix[g_eu[i]][i] += 1
        g_suffix[g_ev[i]][i] += 1
    # completion counts; exact wherever r + b <= 2m + 1
    for j in range(2 * m + 3):
        g_comp[0][j] = 1
    for i in range(1, m + 1):
        g_comp[i][2 * m + 2] = 1
        for j in range(2 * m + 1, -1, -1):
            g_comp[i][j] = j * g_comp[i - 1][j] + g_comp[i - 1][j + 1]

    for v in range(n):
        g_dc[v] = 0
        g_rcnt[v] = 0
        for c in range(m + 1):
            g_cnt[v][c] = 0
    g_examined = 0
    g_hyp = 0
    g_counter = []
    g_collect = []

    blocks = 0
    rb = 0
    for i in range(depth0):
        cc = prefix[i]
        if cc > blocks:
            raise ValueError(f"prefix is not a restricted growth string at {i}")
        u = g_eu[i]
        v = g_ev[i]
        if not rb or g_mode == MODE_PERVERTEX:
            for j in range(g_tri_n[i]):
                c1 = g_colors[g_tri_e1[i][j]]
                c2 = g_colors[g_tri_e2[i][j]]
                if c1 != c2 and c1 != cc and c2 != cc:
                    rb = 1
                    if g_mode == MODE_PERVERTEX:
                        g_rcnt[g_tri_w[i][j]] += 1
                        g_rcnt[u] += 1
                        g_rcnt[v] += 1
        g_colors[i] = cc
        if g_cnt[u][cc] == 0:
            g_dc[u] += 1
        if g_cnt[v][cc] == 0:
            g_dc[v] += 1
        g_cnt[u][cc] += 1
        g_cnt[v][cc] += 1
        if cc == blocks:
            blocks += 1

    dead = 0
    if min_cd2:
        for v in range(n):
            if 2 * (g_dc[v] + g_suffix[v][depth0]) < min_cd2:
                dead = 1
                break
    if g_mode == MODE_COLLECT_RFREE and rb:
        dead = 1
    if dead:
        return int(g_comp[m - depth0][blocks]), 0, [], []

    _descend(depth0, blocks, rb)
    return int(g_examined), int(g_hyp), g_counter, g_collect


# ---------------------------------------------------------------------------
# exhaustive structure search (colorings avoiding a forbidden structure)
# ---------------------------------------------------------------------------

cdef int s_n, s_m, s_min_cd2, s_forbid_two, s_cap
cdef int s_eu[24]
cdef int s_ev[24]
cdef int s_suffix[8][25]
cdef int s_cnt[8][25]
cdef int s_dc[8]
cdef int s_colors[24]
cdef int s_tri_n[24]
cdef int s_tri_e1[24][8]
cdef int s_tri_e2[24][8]
cdef unsigned int s_tri_mask[24][8]
cdef unsigned int s_rmasks[128]
cdef int s_nrmask
cdef unsigned long long s_nodes
cdef list s_found


cdef int _sdfs(int depth, int blocks):
    # returns 1 when the found-cap asks the search to stop
    global s_nodes, s_nrmask
    cdef int u, v, su, sv, c, i, j, new_u, new_v, dead, nnew, stop
    cdef unsigned int mk
    cdef unsigned int new_masks[8]
    s_nodes += 1
    if depth == s_m:
        out = []
        for i in range(s_m):
            out.append(s_colors[i])
        s_found.append(tuple(out))
        return 1 if len(s_found) >= s_cap else 0
    u = s_eu[depth]
    v = s_ev[depth]
    su = s_suffix[u][depth + 1]
    sv = s_suffix[v][depth + 1]
    for c in range(blocks + 1):
        new_u = 1 if s_cnt[u][c] == 0 else 0
        new_v = 1 if s_cnt[v][c] == 0 else 0
        if s_min_cd2 and (2 * (s_dc[u] + new_u + su) < s_min_cd2
                          or 2 * (s_dc[v] + new_v + sv) < s_min_cd2):
            continue
        dead = 0
        nnew = 0
        for i in range(s_tri_n[depth]):
            if s_colors[s_tri_e1[depth][i]] != s_colors[s_tri_e2[depth][i]] \
                    and s_colors[s_tri_e1[depth][i]] != c \
                    and s_colors[s_tri_e2[depth][i]] != c:
                if not s_forbid_two:
                    dead = 1
                    break
                mk = s_tri_mask[depth][i]
                for j in range(s_nrmask):
                    if not (s_rmasks[j] & mk):
                        dead = 1
                        break
                if dead:
                    break
                for j in range(nnew):
                    if not (new_masks[j] & mk):
                        dead = 1
                        break
                if dead:
                    break
                new_masks[nnew] = mk
                nnew += 1
        if dead:
            continue
        s_colors[depth] = c
        s_cnt[u][c] += 1
        s_cnt[v][c] += 1
        s_dc[u] += new_u
        s_dc[v] += new_v
        for j in range(nnew):
            s_rmasks[s_nrmask] = new_masks[j]
            s_nrmask += 1
        stop = _sdfs(depth + 1, blocks + 1 if c == blocks else blocks)
        s_nrmask -= nnew
        s_cnt[u][c] -= 1
        s_cnt[v][c] -= 1
        s_dc[u] -= new_u
        s_dc[v] -= new_v
        if stop:
            return 1
    return 0


def structure_search(int n, int min_cd2, int forbid_two_disjoint, int cap, order):
    """Compiled twin of pure.structure_search; identical contract."""
    global s_n, s_m, s_min_cd2, s_forbid_two, s_cap, s_nodes, s_found, s_nrmask
    cdef int m = len(order)
    cdef int i, u, v, w, a, b, cc, e1, e2, e3, last, c
    if n > 8 or m > 24:
        raise ValueError("structure search supports n <= 8 and at most 24 edges")
    s_n = n
    s_m = m
    s_min_cd2 = min_cd2
    s_forbid_two = forbid_two_disjoint
    s_cap = cap
    cdef int pos[8][8]
    for u in range(n):
        for v in range(n):
            pos[u][v] = -1
    for i in range(m):
        u, v = order[i]
        if u > v:
            u, v = v, u
        s_eu[i] = u
        s_ev[i] = v
        pos[u][v] = i
        pos[v][u] = i
    for i in range(m):
        s_tri_n[i] = 0
    for a in range(n):
        for b in range(a + 1, n):
            for cc in range(b + 1, n):
                e1 = pos[a][b]
                e2 = pos[a][cc]
                e3 = pos[b][cc]
                if e1 < 0 or e2 < 0 or e3 < 0:
                    continue
                last = e1 if e1 > e2 else e2
                if e3 > last:
                    last = e3
                i = s_tri_n[last]
                # store the two non-last edges of the triangle
                if last == e1:
                    s_tri_e1[last][i] = e2
                    s_tri_e2[last][i] = e3
                elif last == e2:
                    s_tri_e1[last][i] = e1
                    s_tri_e2[last][i] = e3
                else:
                    s_tri_e1[last][i] = e1
                    s_tri_e2[last][i] = e2
                s_tri_mask[last][i] = ((<unsigned int>1) << a) | ((<unsigned int>1) << b) | ((<unsigned int>1) << cc)
                s_tri_n[last] += 1
    for v in range(n):
        s_suffix[v][m] = 0
    for i in range(m - 1, -1, -1):
        for v in range(n):
            s_suffix[v][i] = s_suffix[v][i + 1]
        s_suffix[s_eu[i]][i] += 1
        s_suffix[s_ev[i]][i] += 1
    for v in range(n):
        s_dc[v] = 0
        for c in range(m + 1):
            s_cnt[v][c] = 0
    s_nodes = 0
    s_nrmask = 0
    s_found = []
    cdef int stopped = _sdfs(0, 0)
    return int(s_nodes), s_found, not stopped


# ---------------------------------------------------------------------------
# flat color-matrix helpers used by the randomized verifier (n <= 16)
# ---------------------------------------------------------------------------

cdef int _load_flat(int n, object cmat, int *buf) except -1:
    cdef int i
    if n > 16:
        raise ValueError(f"flat kernels support n <= 16, got {n}")
    if len(cmat) != n * n:
        raise ValueError("color matrix has the wrong length")
    for i in range(n * n):
        buf[i] = cmat[i]
    return 0


def pervertex_rainbow(int n, cmat):
    cdef int buf[256]
    cdef int counts[16]
    cdef int a, b, c, cab, cac, cbc
    _load_flat(n, cmat, buf)
    for a in range(n):
        counts[a] = 0
    for a in range(n):
        for b in range(a + 1, n):
            cab = buf[a * n + b]
            if cab < 0:
                continue
            for c in range(b + 1, n):
                cac = buf[a * n + c]
                cbc = buf[b * n + c]
                if cac < 0 or cbc < 0:
                    continue
                if cab != cac and cab != cbc and cac != cbc:
                    counts[a] += 1
                    counts[b] += 1
                    counts[c] += 1
    out = []
    for a in range(n):
        out.append(counts[a])
    return out


def exists_rainbow(int n, cmat):
    cdef int buf[256]
    cdef int a, b, c, cab, cac, cbc
    _load_flat(n, cmat, buf)
    for a in range(n):
        for b in range(a + 1, n):
            cab = buf[a * n + b]
            if cab < 0:
                continue
            for c in range(b + 1, n):
                cac = buf[a * n + c]
                cbc = buf[b * n + c]
                if cac < 0 or cbc < 0:
                    continue
                if cab != cac and cab != cbc and cac != cbc:
                    return True
    return False


def two_disjoint_rainbow(int n, cmat):
    cdef int buf[256]
    cdef unsigned int masks[600]
    cdef int nmask = 0
    cdef int a, b, c, i, cab, cac, cbc
    cdef unsigned int mask
    _load_flat(n, cmat, buf)
    for a in range(n):
        for b in range(a + 1, n):
            cab = buf[a * n + b]
            if cab < 0:
                continue
            for c in range(b + 1, n):
                cac = buf[a * n + c]
                cbc = buf[b * n + c]
                if cac < 0 or cbc < 0:
                    continue
                if cab != cac and cab != cbc and cac != cbc:
                    mask = ((<unsigned int>1) << a) | ((<unsigned int>1) << b) | ((<unsigned int>1) << c)
                    for i in range(nmask):
                        if not masks[i] & mask:
                            return True
                    masks[nmask] = mask
                    nmask += 1
    return False
