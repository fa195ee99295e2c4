"""Dinic's maximum flow with exact rational capacities."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable


class FlowNetwork:
    def __init__(self, node_count: int):
        self.n = node_count
        self.head: list[int] = []
        self.cap: list[Fraction] = []
        self.adj: list[list[int]] = [[] for _ in range(node_count)]

    def add_arc(self, u: int, v: int, capacity) -> None:
        capacity = Fraction(capacity)
        if capacity < 0:
            raise ValueError("capacities must be nonnegative")
        # arc 2k is forward, 2k+1 its residual twin
        self.adj[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(capacity)
        self.adj[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(Fraction(0))

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.head[a]
                if level[v] < 0 and self.cap[a] > 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _blocking(self, s: int, t: int, level: list[int]) -> Fraction:
        it = [0] * self.n
        total = Fraction(0)
        while True:
            # iterative DFS for one augmenting path in the level graph
            path: list[int] = []
            u = s
            while u != t:
                adj = self.adj[u]
                while it[u] < len(adj):
                    a = adj[it[u]]
                    v = self.head[a]
                    if self.cap[a] > 0 and level[v] == level[u] + 1:
                        break
                    it[u] += 1
                if it[u] == len(adj):
                    if u == s:
                        return total
                    level[u] = -1  # dead end
                    a = path.pop()
                    u = self.head[a ^ 1]
                    it[u] += 1
                    continue
                a = adj[it[u]]
                path.append(a)
                u = self.head[a]
            push = min(self.cap[a] for a in path)
            for a in path:
                self.cap[a] -= push
                self.cap[a ^ 1] += push
            total += push

    def max_flow(self, s: int, t: int) -> Fraction:
        flow = Fraction(0)
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            flow += self._blocking(s, t, level)

    def reachable(self, s: int) -> set[int]:
        """Nodes reachable from ``s`` in the residual graph (the minimal min-cut side)."""
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for a in self.adj[u]:
                v = self.head[a]
                if self.cap[a] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def max_flow_min_cut(node_count: int, arcs: Iterable[tuple[int, int, object]], s: int, t: int) -> tuple[Fraction, set[int]]:
    net = FlowNetwork(node_count)
    for u, v, c in arcs:
        if c:
            net.add_arc(u, v, c)
    value = net.max_flow(s, t)
    return value, net.reachable(s)
