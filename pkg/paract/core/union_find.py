class UnionFind:
    """Disjoint sets over 0..n-1 with union by rank and path compression"""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def classes(self) -> list[tuple[int, ...]]:
        """Blocks as sorted tuples, ordered by their least element"""
        blocks = {}
        for x in range(len(self.parent)):
            blocks.setdefault(self.find(x), []).append(x)
        return sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0])


def partition_index(classes) -> tuple[int, ...]:
    """Inverse of a partition of 0..n-1: point -> index of its block"""
    n = sum(len(c) for c in classes)
    class_of = [-1] * n
    for i, c in enumerate(classes):
        for x in c:
            class_of[x] = i
    return tuple(class_of)
