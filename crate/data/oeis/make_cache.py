"""Regenerates the offline sequence cache without touching the Rust code."""
from itertools import permutations
from pathlib import Path

HERE = Path(__file__).parent


def involutions(n_max):
    a = [1, 1]
    for n in range(2, n_max + 1):
        a.append(a[-1] + (n - 1) * a[-2])
    return a[: n_max + 1]


def euler_zigzag(n_max):
    # boustrophedon (Seidel) triangle
    out, row = [1], [1]
    for _ in range(n_max):
        new = [0]
        for v in reversed(row):
            new.append(new[-1] + v)
        row = new
        out.append(row[-1])
    return out


def eulerian_rows(n_max):
    rows, prev = [], [1]
    for n in range(1, n_max + 1):
        cur = [0] * n
        for k in range(n):
            a = (k + 1) * prev[k] if k < len(prev) else 0
            b = (n - k) * prev[k - 1] if 0 < k <= len(prev) else 0
            cur[k] = a + b
        rows.append(cur)
        prev = cur
    return rows


def exterior_peak_rows(n_max):
    rows = []
    for n in range(n_max + 1):
        counts = {}
        for p in permutations(range(1, n + 1)):
            s = (0,) + p
            k = sum(1 for i in range(1, n) if s[i - 1] < s[i] > s[i + 1])
            counts[k] = counts.get(k, 0) + 1
        rows.append([counts.get(k, 0) for k in range(max(counts) + 1)])
    return rows


def write(seq_id, title, values):
    body = " ".join(str(v) for v in values)
    (HERE / f"{seq_id}.seq").write_text(f"# {title}\n{seq_id}: {body}\n")


write("A000085", "involutions of [n], n >= 0", involutions(14))
write("A000111", "Euler zigzag numbers, n >= 0", euler_zigzag(14))
write("A008292", "Eulerian triangle by rows, n >= 1", [v for r in eulerian_rows(10) for v in r])
write("A008971", "exterior peak triangle by rows, n >= 0", [v for r in exterior_peak_rows(9) for v in r])
