"""Graph input and output.

Reads graph6 and sparse6 for simple graphs plus a plain adjacency-list text
format for multigraphs: one "u v" pair per line, repeated lines for parallel
edges, "u u" for a loop, a bare "u" for an isolated vertex. Edge ids follow
the order edges appear in the source, so files are id-stable.
"""

from .errors import GraphError
from .multigraph import MultiGraph

_GRAPH6_HEADER = ">>graph6<<"
_SPARSE6_HEADER = ">>sparse6<<"


def _decode_size(data):
    if not data:
        raise GraphError("empty graph6/sparse6 payload")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphError("truncated graph size field")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise GraphError("truncated graph size field")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def _bits(data):
    for b in data:
        v = b - 63
        if not 0 <= v < 64:
            raise GraphError("byte outside graph6 range")
        for i in range(5, -1, -1):
            yield (v >> i) & 1


def parse_graph6(line):
    """Decode one graph6 line into a simple graph."""
    line = line.strip()
    if line.startswith(_GRAPH6_HEADER):
        line = line[len(_GRAPH6_HEADER):]
    data = line.encode("ascii")
    n, offset = _decode_size(data)
    pairs = []
    bits = _bits(data[offset:])
    try:
        for j in range(1, n):
            for i in range(j):
                if next(bits):
                    pairs.append((i, j))
    except StopIteration:
        raise GraphError("graph6 payload too short") from None
    return MultiGraph.from_edge_list(pairs, vertices=range(n))


def write_graph6(g):
    """Encode a simple graph; vertices are renumbered to 0..n-1 in sorted order."""
    if not g.is_simple():
        raise GraphError("graph6 encodes simple graphs only")
    order = {v: i for i, v in enumerate(g.vertex_ids)}
    n = g.num_vertices
    adj = set()
    for _, u, v in g.edge_items():
        a, b = sorted((order[u], order[v]))
        adj.add((a, b))
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise GraphError("graph too large for this writer")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return bytes(head + body).decode("ascii")


def parse_sparse6(line):
    """Decode one sparse6 line; loops and parallel edges are kept."""
    line = line.strip()
    if line.startswith(_SPARSE6_HEADER):
        line = line[len(_SPARSE6_HEADER):]
    if not line.startswith(":"):
        raise GraphError("sparse6 lines start with ':'")
    data = line[1:].encode("ascii")
    n, offset = _decode_size(data)
    k = max(1, (n - 1).bit_length())
    bits = list(_bits(data[offset:]))
    pairs = []
    v = 0
    pos = 0
    while pos + k < len(bits):
        b = bits[pos]
        x = 0
        for bit in bits[pos + 1:pos + 1 + k]:
            x = (x << 1) | bit
        pos += 1 + k
        if b:
            v += 1
        if x > v:
            v = x
        elif v < n:
            pairs.append((x, v))
        if v >= n:
            break
    return MultiGraph.from_edge_list(pairs, vertices=range(n))


def parse_adjacency(text):
    """Parse the adjacency-list multigraph format."""
    pairs = []
    vertices = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers") from None
        if len(nums) == 1:
            vertices.add(nums[0])
        elif len(nums) == 2:
            pairs.append((nums[0], nums[1]))
        else:
            raise GraphError(f"line {lineno}: expected 'u v' or a bare vertex")
    return MultiGraph.from_edge_list(pairs, vertices=vertices)


def write_adjacency(g):
    lines = [f"{u} {v}" for _, u, v in g.edge_items()]
    covered = {w for _, u, v in g.edge_items() for w in (u, v)}
    lines.extend(str(v) for v in g.vertex_ids if v not in covered)
    return "\n".join(lines) + "\n"


def parse_graph_text(text):
    """Detect and parse a single-graph payload in any supported format."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(_SPARSE6_HEADER) or line.startswith(":"):
            return parse_sparse6(line)
        if line.startswith(_GRAPH6_HEADER):
            return parse_graph6(line)
        if line.split("#", 1)[0].strip() and all(
                tok.lstrip("-").isdigit() for tok in line.split("#", 1)[0].split()):
            return parse_adjacency(text)
        return parse_graph6(line)
    raise GraphError("no graph found in input")


def load_graph(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph_text(fh.read())


def iter_batch(path):
    """Yield graphs from a file of graph6/sparse6 lines."""
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith(_SPARSE6_HEADER) or line.startswith(":"):
                yield parse_sparse6(line)
            else:
                yield parse_graph6(line)
