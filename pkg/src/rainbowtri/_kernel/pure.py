"""Pure-Python sweep and triangle kernels (fallback for the compiled core).

Every function here has a compiled twin in ``_ckernel``; results must be
bit-identical between the two backends.
"""

from __future__ import annotations

from ..bell import completion_counts

MODE_EXISTS = 0          # conclusion: a rainbow triangle exists
MODE_PERVERTEX = 1       # conclusion: every vertex lies in >= k rainbow triangles
MODE_COLLECT_RFREE = 2   # hypothesis adds rainbow-freeness; leaves are collected

SWEEP_MAX_N = 7


def edge_order(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _sweep_tables(n: int):
    pairs = edge_order(n)
    m = len(pairs)
    eidx = {p: i for i, p in enumerate(pairs)}
    # triangles completed when edge (u, v) is assigned: {(w, u, v) : w < u}
    tri = []
    for u, v in pairs:
        tri.append([(eidx[(w, u)], eidx[(w, v)], w) for w in range(u)])
    # suffix[v][i] = number of edges with index >= i incident to v
    suffix = [[0] * (m + 1) for _ in range(n)]
    for i in range(m - 1, -1, -1):
        u, v = pairs[i]
        for w in range(n):
            suffix[w][i] = suffix[w][i + 1] + (1 if w == u or w == v else 0)
    return pairs, m, tri, suffix


def sweep(n: int, min_cd2: int, mode: int, k: int,
          prefix: tuple[int, ...] = ()):
    """Walk every canonical coloring of K_n below an RGS prefix.

    Counts every coloring of the subtree (pruned subtrees are counted in bulk
    through the completion table), evaluates the color-degree hypothesis
    2*d^c(v) >= min_cd2 exactly, and applies the conclusion given by ``mode``.

    Returns (examined, hypothesis_count, counterexamples, collected) where the
    last two are lists of full RGS tuples in lexicographic order.
    """
    if n > SWEEP_MAX_N:
        raise ValueError(f"sweep kernel supports n <= {SWEEP_MAX_N}, got {n}")
    pairs, m, tri, suffix = _sweep_tables(n)
    comp = completion_counts(m)
    depth0 = len(prefix)
    if depth0 > m:
        raise ValueError("prefix longer than the edge list")

    cnt = [[0] * (m + 1) for _ in range(n)]
    dc = [0] * n
    rcnt = [0] * n
    colors = [0] * m

    counterexamples: list[tuple[int, ...]] = []
    collected: list[tuple[int, ...]] = []

    # replay the prefix without pruning; soundness checks happen afterwards
    blocks = 0
    rb = False
    for i, c in enumerate(prefix):
        if c > blocks:
            raise ValueError(f"prefix is not a restricted growth string at {i}")
        u, v = pairs[i]
        if not rb or mode == MODE_PERVERTEX:
            for e1, e2, w in tri[i]:
                c1, c2 = colors[e1], colors[e2]
                if c1 != c2 and c1 != c and c2 != c:
                    rb = True
                    if mode == MODE_PERVERTEX:
                        rcnt[w] += 1
                        rcnt[u] += 1
                        rcnt[v] += 1
        colors[i] = c
        if cnt[u][c] == 0:
            dc[u] += 1
        if cnt[v][c] == 0:
            dc[v] += 1
        cnt[u][c] += 1
        cnt[v][c] += 1
        if c == blocks:
            blocks += 1

    dead = False
    if min_cd2:
        for v in range(n):
            if 2 * (dc[v] + suffix[v][depth0]) < min_cd2:
                dead = True
                break
    if mode == MODE_COLLECT_RFREE and rb:
        dead = True
    if dead:
        return comp[m - depth0][blocks], 0, [], []

    examined = 0
    hyp = 0

    def descend(depth: int, blocks: int, rb: bool) -> None:
        nonlocal examined, hyp
        if depth == m:
            examined += 1
            hyp += 1
            if mode == MODE_EXISTS:
                if not rb:
                    counterexamples.append(tuple(colors))
            elif mode == MODE_PERVERTEX:
                if min(rcnt) < k:
                    counterexamples.append(tuple(colors))
            else:
                collected.append(tuple(colors))
            return
        u, v = pairs[depth]
        su = suffix[u][depth + 1]
        sv = suffix[v][depth + 1]
        cnt_u = cnt[u]
        cnt_v = cnt[v]
        tri_here = tri[depth]
        comp_row = comp[m - depth - 1]
        for c in range(blocks + 1):
            nb = blocks + 1 if c == blocks else blocks
            new_u = cnt_u[c] == 0
            new_v = cnt_v[c] == 0
            du = dc[u] + new_u
            dv = dc[v] + new_v
            if min_cd2 and (2 * (du + su) < min_cd2 or 2 * (dv + sv) < min_cd2):
                examined += comp_row[nb]
                continue
            nrb = rb
            flips = 0
            if mode == MODE_PERVERTEX:
                for e1, e2, w in tri_here:
                    c1, c2 = colors[e1], colors[e2]
                    if c1 != c2 and c1 != c and c2 != c:
                        nrb = True
                        rcnt[w] += 1
                        flips |= 1 << w
                rcnt[u] += bin(flips).count("1")
                rcnt[v] += bin(flips).count("1")
            elif not nrb:
                for e1, e2, _w in tri_here:
                    c1, c2 = colors[e1], colors[e2]
                    if c1 != c2 and c1 != c and c2 != c:
                        nrb = True
                        break
                if nrb and mode == MODE_COLLECT_RFREE:
                    examined += comp_row[nb]
                    continue
            colors[depth] = c
            cnt_u[c] += 1
            cnt_v[c] += 1
            dc[u] = du
            dc[v] = dv
            descend(depth + 1, nb, nrb)
            cnt_u[c] -= 1
            cnt_v[c] -= 1
            dc[u] -= new_u
            dc[v] -= new_v
            if flips:
                nflip = bin(flips).count("1")
                rcnt[u] -= nflip
                rcnt[v] -= nflip
                for w in range(u):
                    if flips >> w & 1:
                        rcnt[w] -= 1
        return

    descend(depth0, blocks, rb)
    return examined, hyp, counterexamples, collected


def structure_search(n: int, min_cd2: int, forbid_two_disjoint: bool,
                     cap: int, order: list[tuple[int, int]]):
    """Exhaustive search for colorings meeting a color-degree bound while
    avoiding a forbidden structure (any rainbow triangle, or two
    vertex-disjoint rainbow triangles).

    ``order`` lists the colorable edges (the graph need not be complete);
    enumeration covers every coloring of those edges once up to color
    renaming.  Returns (nodes, found, exhausted) where found holds up to
    ``cap`` color tuples in ``order``'s edge order and exhausted says whether
    the whole space was swept (False when the cap stopped the search).
    """
    m = len(order)
    if n > 8 or m > 24:
        raise ValueError("structure search supports n <= 8 and at most 24 edges")
    pos = {}
    for i, (u, v) in enumerate(order):
        if u > v:
            u, v = v, u
        pos[(u, v)] = i
    # each triangle attaches to its last-listed edge
    tri = [[] for _ in range(m)]
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                e1 = pos.get((a, b))
                e2 = pos.get((a, c))
                e3 = pos.get((b, c))
                if e1 is None or e2 is None or e3 is None:
                    continue
                last = max(e1, e2, e3)
                others = sorted({e1, e2, e3} - {last})
                tri[last].append((others[0], others[1], a, b, c))
    suffix = [[0] * (m + 1) for _ in range(n)]
    for i in range(m - 1, -1, -1):
        u, v = order[i]
        for w in range(n):
            suffix[w][i] = suffix[w][i + 1] + (1 if w == u or w == v else 0)
    colors = [0] * m
    cnt = [[0] * (m + 1) for _ in range(n)]
    dc = [0] * n
    rmasks: list[int] = []
    found: list[tuple[int, ...]] = []
    nodes = 0

    def dfs(depth: int, blocks: int) -> bool:
        nonlocal nodes
        nodes += 1
        if depth == m:
            found.append(tuple(colors))
            return len(found) >= cap
        u, v = order[depth]
        su = suffix[u][depth + 1]
        sv = suffix[v][depth + 1]
        for c in range(blocks + 1):
            new_u = cnt[u][c] == 0
            new_v = cnt[v][c] == 0
            if min_cd2 and (2 * (dc[u] + new_u + su) < min_cd2
                            or 2 * (dc[v] + new_v + sv) < min_cd2):
                continue
            new_masks = []
            dead = False
            for e1, e2, a, b, cc in tri[depth]:
                c1, c2 = colors[e1], colors[e2]
                if c1 != c2 and c1 != c and c2 != c:
                    if not forbid_two_disjoint:
                        dead = True
                        break
                    mk = 1 << a | 1 << b | 1 << cc
                    for om in rmasks:
                        if not om & mk:
                            dead = True
                            break
                    if dead:
                        break
                    for om in new_masks:
                        if not om & mk:
                            dead = True
                            break
                    if dead:
                        break
                    new_masks.append(mk)
            if dead:
                continue
            colors[depth] = c
            cnt[u][c] += 1
            cnt[v][c] += 1
            dc[u] += new_u
            dc[v] += new_v
            rmasks.extend(new_masks)
            stop = dfs(depth + 1, blocks + 1 if c == blocks else blocks)
            if new_masks:
                del rmasks[-len(new_masks):]
            cnt[u][c] -= 1
            cnt[v][c] -= 1
            dc[u] -= new_u
            dc[v] -= new_v
            if stop:
                return True
        return False

    stopped = dfs(0, 0)
    return nodes, found, not stopped


# ---------------------------------------------------------------------------
# flat color-matrix helpers used by the randomized verifier
# ---------------------------------------------------------------------------

def pervertex_rainbow(n: int, cmat: list[int]) -> list[int]:
    """Rainbow triangle count through each vertex; cmat is flat n*n, -1 absent."""
    counts = [0] * n
    for a in range(n):
        base_a = a * n
        for b in range(a + 1, n):
            cab = cmat[base_a + b]
            if cab < 0:
                continue
            base_b = b * n
            for c in range(b + 1, n):
                cac = cmat[base_a + c]
                cbc = cmat[base_b + c]
                if cac < 0 or cbc < 0:
                    continue
                if cab != cac and cab != cbc and cac != cbc:
                    counts[a] += 1
                    counts[b] += 1
                    counts[c] += 1
    return counts


def exists_rainbow(n: int, cmat: list[int]) -> bool:
    for a in range(n):
        base_a = a * n
        for b in range(a + 1, n):
            cab = cmat[base_a + b]
            if cab < 0:
                continue
            base_b = b * n
            for c in range(b + 1, n):
                cac = cmat[base_a + c]
                cbc = cmat[base_b + c]
                if cac < 0 or cbc < 0:
                    continue
                if cab != cac and cab != cbc and cac != cbc:
                    return True
    return False


def two_disjoint_rainbow(n: int, cmat: list[int]) -> bool:
    """Whether two vertex-disjoint rainbow triangles exist (early exit)."""
    masks: list[int] = []
    for a in range(n):
        base_a = a * n
        for b in range(a + 1, n):
            cab = cmat[base_a + b]
            if cab < 0:
                continue
            base_b = b * n
            for c in range(b + 1, n):
                cac = cmat[base_a + c]
                cbc = cmat[base_b + c]
                if cac < 0 or cbc < 0:
                    continue
                if cab != cac and cab != cbc and cac != cbc:
                    mask = 1 << a | 1 << b | 1 << c
                    for other in masks:
                        if not other & mask:
                            return True
                    masks.append(mask)
    return False
