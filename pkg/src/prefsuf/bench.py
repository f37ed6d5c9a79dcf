"""Benchmark drivers and the seedable instance generators behind them.

Everything here prints through returned line lists so the CLI stays a thin
shell and tests can call the drivers directly with small sizes. All
randomness flows through an explicit ``random.Random`` so a printed seed
reproduces the run exactly.
"""

import random
import statistics
import time
from array import array
from concurrent.futures import ThreadPoolExecutor

from .bipartite import BipartiteGraph, BipartiteMatcher
from .index import PrefSufIndex


def random_text(rng: random.Random, n: int, alphabet: bytes = b"ab") -> bytes:
    return bytes(rng.choices(alphabet, k=n))


def random_queries(rng: random.Random, n: int, count: int):
    """``count`` (i, j) pairs drawn uniformly from [0, n)^2, as int arrays."""
    i_arr = array("i", (rng.randrange(n) for _ in range(count)))
    j_arr = array("i", (rng.randrange(n) for _ in range(count)))
    return i_arr, j_arr


def bench_graph(
    rng: random.Random,
    total_label_length: int,
    edge_count: int,
    pattern: bytes,
    nodes_per_side: int = 256,
) -> BipartiteGraph:
    """Random bipartite instance with ``total_label_length`` letters of labels.

    U labels are pinned to end with the pattern's first letter and V labels to
    start with its last, so every edge survives to the per-edge query stage
    and the work bound (one query per edge, one feed per letter) is exact.
    """
    if total_label_length < 4:
        raise ValueError("need at least 4 letters of labels")
    half = total_label_length // 2
    count = max(1, min(nodes_per_side, half // 2))
    u_nodes = []
    v_nodes = []
    for side, prefix, budget, pin_last in (
        ("u", "u", half, True),
        ("v", "v", total_label_length - half, False),
    ):
        nodes = u_nodes if side == "u" else v_nodes
        base = budget // count
        for k in range(count):
            length = base + (budget - base * count if k == count - 1 else 0)
            body = bytearray(random_text(rng, length))
            if pin_last:
                body[-1] = pattern[0]
            else:
                body[0] = pattern[-1]
            nodes.append((f"{prefix}{k}", bytes(body)))
    edges = [(rng.randrange(count), rng.randrange(count)) for _ in range(edge_count)]
    return BipartiteGraph(u_nodes, v_nodes, edges)


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def run_build_bench(size: int, repetitions: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    text = random_text(rng, size)
    times = [_timed(lambda: PrefSufIndex(text)) for _ in range(repetitions)]
    index = PrefSufIndex(text)
    return [
        f"# seed={seed}",
        f"build\tsize={size}\treps={repetitions}",
        f"mean_s\t{statistics.mean(times):.6f}",
        f"median_s\t{statistics.median(times):.6f}",
        f"lce_lookups\t{index.lce_lookups}",
    ]


def _query_slice(index: PrefSufIndex, i_arr, j_arr, lo: int, hi: int) -> None:
    query = index.query
    for k in range(lo, hi):
        query(i_arr[k], j_arr[k])


def run_query_bench(size: int, repetitions: int, seed: int, threads: int = 1) -> list[str]:
    rng = random.Random(seed)
    text = random_text(rng, size)
    index = PrefSufIndex(text)
    chunk = min(repetitions, 1_000_000)
    done = 0
    times = []
    while done < repetitions:
        count = min(chunk, repetitions - done)
        i_arr, j_arr = random_queries(rng, size, count)
        if threads <= 1:
            times.append(_timed(lambda: _query_slice(index, i_arr, j_arr, 0, count)))
        else:
            bounds = [(k * count // threads, (k + 1) * count // threads) for k in range(threads)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                start = time.perf_counter()
                for future in [
                    pool.submit(_query_slice, index, i_arr, j_arr, lo, hi) for lo, hi in bounds
                ]:
                    future.result()
                times.append(time.perf_counter() - start)
        done += count
    total = sum(times)
    return [
        f"# seed={seed}",
        f"query\tsize={size}\treps={repetitions}\tthreads={threads}",
        f"mean_per_query_ns\t{total / repetitions * 1e9:.1f}",
        f"median_chunk_s\t{statistics.median(times):.6f}",
        f"lce_lookups\t{index.lce_lookups}",
        f"prefsuf_queries\t{index.query_count}",
    ]


def run_bipartite_bench(
    size: int, edge_count: int, repetitions: int, seed: int, pattern_length: int = 16
) -> list[str]:
    rng = random.Random(seed)
    pattern = random_text(rng, pattern_length)
    matcher = BipartiteMatcher(pattern)
    graph = bench_graph(rng, size, edge_count, pattern)
    times = [_timed(lambda: matcher.match_all(graph)) for _ in range(repetitions)]
    return [
        f"# seed={seed}",
        f"bipartite\tN={size}\tedges={edge_count}\treps={repetitions}",
        f"mean_s\t{statistics.mean(times):.6f}",
        f"median_s\t{statistics.median(times):.6f}",
        f"prefsuf_queries\t{matcher.index.query_count}",
        f"letters_fed\t{matcher.forward.letters_fed + matcher.backward.letters_fed}",
        f"failure_steps\t{matcher.forward.failure_steps + matcher.backward.failure_steps}",
    ]
