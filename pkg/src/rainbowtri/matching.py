"""Maximum matching in general graphs via augmenting paths with blossom contraction."""

from __future__ import annotations

from typing import Sequence


def maximum_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Maximum-cardinality matching of an undirected graph.

    ``adj[v]`` lists the neighbors of v.  Returns ``match`` with
    ``match[v]`` = partner of v or -1.  Blossoms are contracted on the fly
    (the graph need not be bipartite), so the result is exactly maximum.
    """
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lowest_common_ancestor(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom around the LCA
                    cur_base = lowest_common_ancestor(v, to)
                    blossom = [False] * n
                    mark_path(v, cur_base, to, blossom)
                    mark_path(to, cur_base, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1:
            u = find_augmenting_path(v)
            while u != -1:
                pv = parent[u]
                ppv = match[pv]
                match[u] = pv
                match[pv] = u
                u = ppv
    return match


def matching_size(match: Sequence[int]) -> int:
    return sum(1 for v, u in enumerate(match) if u > v)
