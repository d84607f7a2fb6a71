"""Chinese Rings (baguenaudier) state graph and the reflected binary Gray code.

Ring states are words of length n written with ring n leftmost, so the
rightmost character is ring 1. Ring 1 can always be moved; ring k > 1 can
be moved exactly when ring k-1 is on the bar and rings 1..k-2 are off.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Union

from .errors import DomainError, require_positive
from .words import BitWord

RingState = BitWord
GrayWord = BitWord


def _word(s: Union[BitWord, str]) -> BitWord:
    return s if isinstance(s, BitWord) else BitWord(s)


def _flip(bits: str, ring: int) -> str:
    i = len(bits) - ring
    return bits[:i] + ("0" if bits[i] == "1" else "1") + bits[i + 1:]


def legal_moves(s: Union[RingState, str]) -> List[RingState]:
    """States reachable from ``s`` by moving a single ring."""
    bits = _word(s).bits
    if not bits:
        return []
    out = [BitWord(_flip(bits, 1))]
    # ring k-1 is the lowest ring on the bar -> ring k may move
    low = bits.rfind("1")
    if low != -1:
        ring_below = len(bits) - low
        if ring_below < len(bits):
            out.append(BitWord(_flip(bits, ring_below + 1)))
    return out


def state_graph(n: int) -> Dict[str, List[str]]:
    """Adjacency lists of the n-ring state graph, keyed by state string."""
    require_positive(n)
    return {
        s.bits: [t.bits for t in legal_moves(s)]
        for s in (BitWord.from_int(i, n) for i in range(1 << n))
    }


def bfs_distances(n: int, source: Union[RingState, str]) -> Dict[str, int]:
    """Move counts from ``source`` to every state, by breadth-first search."""
    src = _word(source).bits
    if len(src) != n:
        raise DomainError(f"state {src!r} is not an {n}-ring state")
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in legal_moves(u):
            if v.bits not in dist:
                dist[v.bits] = dist[u] + 1
                queue.append(v.bits)
    return dist


def ring_path(n: int) -> List[RingState]:
    """Walk the state graph from ``0^n`` to its other end, one move at a time."""
    require_positive(n)
    path = [BitWord("0" * n)]
    prev = None
    while True:
        nxt = [t for t in legal_moves(path[-1]) if t != prev]
        if not nxt:
            return path
        if len(nxt) > 1 or len(path) > 1 << n:
            raise AssertionError(f"{n}-ring state graph is not a path at {path[-1]}")
        prev = path[-1]
        path.append(nxt[0])


def gray_encode(i: int, n: int) -> GrayWord:
    if i < 0 or i >= 1 << n:
        raise DomainError(f"index {i} out of range for {n}-bit Gray code")
    return BitWord.from_int(i ^ (i >> 1), n)


def gray_index(w: Union[GrayWord, str]) -> int:
    """Position of ``w`` in the reflected Gray code (prefix-parity decode)."""
    acc = 0
    out = 0
    for c in _word(w).bits:
        acc ^= c == "1"
        out = (out << 1) | acc
    return out


def gray_code(n: int) -> List[GrayWord]:
    """The 2**n codewords of the n-bit reflected Gray code, in order."""
    require_positive(n)
    return [gray_encode(i, n) for i in range(1 << n)]


def ring_distance(a: Union[RingState, str], b: Union[RingState, str]) -> int:
    """Number of moves between two states of the same puzzle.

    The state graph is a path traversed in Gray-code order, so the distance
    is the difference of the two Gray positions.
    """
    a, b = _word(a), _word(b)
    if len(a) != len(b):
        raise DomainError(f"states have different ring counts: {len(a)} vs {len(b)}")
    return abs(gray_index(a) - gray_index(b))


def to_dot(n: int) -> str:
    """Graphviz rendering of the n-ring state graph."""
    if not 1 <= n <= 6:
        raise DomainError("DOT export is limited to 1 <= n <= 6")
    lines = [f"graph rings{n} {{"]
    graph = state_graph(n)
    for u in sorted(graph):
        lines.append(f'  "{u}";')
    for u in sorted(graph):
        for v in graph[u]:
            if u < v:
                lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
