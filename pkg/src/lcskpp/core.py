"""Sparse computation of the LCSk++ and LCSk string similarity metrics.

The production path works on match pairs: positions (i, j) where the
k-length substrings of x and y agree.  Pair starts and ends are swept in
row-major order while a Fenwick tree over columns keeps running prefix
maxima of the per-pair DP values, so the whole computation costs
O(|x| + |y| + r log r) for r match pairs instead of quadratic time.

Sequences are bytes; str inputs are accepted and encoded as latin-1 so
every symbol stays a single 8-bit code.
"""

from bisect import bisect_left
from dataclasses import dataclass, field

import numpy as np

MODE_LCSKPP = "lcskpp"
MODE_LCSK = "lcsk"

# event kinds; ends sort before starts at equal (row, col)
EVENT_END = 0
EVENT_START = 1

# back-pointer link kinds
PRECEDES = "precedes"
CONTINUES = "continues"


class PairLimitExceeded(RuntimeError):
    """Raised when extraction would emit more match pairs than allowed."""

    def __init__(self, count, limit):
        super().__init__(f"{count} match pairs exceed the limit of {limit}")
        self.count = count
        self.limit = limit


def as_symbols(seq):
    """Normalize a sequence to bytes (str is encoded as latin-1)."""
    if isinstance(seq, bytes):
        return seq
    if isinstance(seq, bytearray):
        return bytes(seq)
    if isinstance(seq, str):
        try:
            return seq.encode("latin-1")
        except UnicodeEncodeError:
            raise ValueError("symbols must be 8-bit codes (latin-1 range)") from None
    raise TypeError(f"expected bytes or str, got {type(seq).__name__}")


def require_valid_k(k):
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"k must be an integer, got {k!r}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def precedes(g, p, k):
    """True if pair g's end is weakly up-left of pair p's start.

    Chaining p after g then adds all k symbols of p.
    """
    return g[0] + k <= p[0] and g[1] + k <= p[1]


def continues(p, g, k):
    """True if p sits one step down-right of g on the same diagonal.

    The windows overlap in k-1 symbols, so chaining adds exactly one.
    """
    return p[0] - p[1] == g[0] - g[1] and p[0] - g[0] == 1


def _window_codes(xa, ya, k):
    """Integer codes for every k-length window of both inputs.

    Returns (codes_x, codes_y, exact).  When the alphabet packs into at
    most 63 bits per window the codes are a perfect (injective) encoding
    and ``exact`` is True; otherwise they are a polynomial rolling hash
    mod 2**64 and candidate matches must be verified.
    """
    present = np.zeros(256, dtype=bool)
    present[xa] = True
    present[ya] = True
    symbols = np.flatnonzero(present)
    bits = max(1, int(len(symbols) - 1).bit_length())
    lut = np.zeros(256, dtype=np.uint64)
    lut[symbols] = np.arange(len(symbols), dtype=np.uint64)
    vx = lut[xa]
    vy = lut[ya]
    if bits * k <= 63:
        shifts = (np.arange(k - 1, -1, -1, dtype=np.uint64) * np.uint64(bits))
        weights = np.uint64(1) << shifts
        exact = True
    else:
        base = 0x9E3779B97F4A7C15  # odd 64-bit multiplier
        powers = [1] * k
        for f in range(k - 2, -1, -1):
            powers[f] = (powers[f + 1] * base) & 0xFFFFFFFFFFFFFFFF
        weights = np.array(powers, dtype=np.uint64)
        exact = False

    def codes(values):
        if len(values) < k:
            return np.empty(0, dtype=np.uint64)
        windows = np.lib.stride_tricks.sliding_window_view(values, k)
        return (windows * weights).sum(axis=1, dtype=np.uint64)

    return codes(vx), codes(vy), exact


def find_match_pairs(x, y, k, max_pairs=None):
    """All (i, j) with x[i:i+k] == y[j:j+k], in row-major order.

    Windows are compared through integer codes (see ``_window_codes``);
    hash-coded candidates are verified symbol-for-symbol so no collision
    can survive.  Raises PairLimitExceeded before emitting pairs if more
    than ``max_pairs`` would be produced.
    """
    require_valid_k(k)
    x = as_symbols(x)
    y = as_symbols(y)
    if k > len(x) or k > len(y):
        return []
    xa = np.frombuffer(x, dtype=np.uint8)
    ya = np.frombuffer(y, dtype=np.uint8)
    codes_x, codes_y, exact = _window_codes(xa, ya, k)

    order = np.argsort(codes_y, kind="stable")
    sorted_y = codes_y[order]
    lo = np.searchsorted(sorted_y, codes_x, side="left")
    hi = np.searchsorted(sorted_y, codes_x, side="right")
    counts = hi - lo
    total = int(counts.sum())
    if max_pairs is not None and total > max_pairs:
        raise PairLimitExceeded(total, max_pairs)
    if total == 0:
        return []

    ii = np.repeat(np.arange(len(codes_x)), counts)
    seg_starts = np.cumsum(counts) - counts
    offsets = np.arange(total) - np.repeat(seg_starts, counts)
    jj = order[np.repeat(lo, counts) + offsets]

    pairs = list(zip(ii.tolist(), jj.tolist()))
    if not exact:
        pairs = [(i, j) for i, j in pairs if x[i:i + k] == y[j:j + k]]
    return pairs


def build_events(pairs, k):
    """Start/end events of the pairs, sorted for the row-major sweep.

    Each event is (row, col, kind, pair_id).  Sorting the tuples directly
    gives row-major order with every end (kind 0) ahead of every start
    (kind 1) at equal coordinates, and same-kind ties broken by pair_id.
    """
    events = []
    for pid, (i, j) in enumerate(pairs):
        events.append((i, j, EVENT_START, pid))
        events.append((i + k, j + k, EVENT_END, pid))
    events.sort()
    return events


def continuation_lookup(pairs, target):
    """Index of the pair at exactly ``target`` in a row-major-sorted list."""
    pos = bisect_left(pairs, target)
    if pos < len(pairs) and pairs[pos] == target:
        return pos
    return None


class PrefixMaxIndex:
    """Fenwick tree over columns: point max-update, prefix max-query.

    Stored values only ever grow, which is what makes the Fenwick layout
    valid for maxima.  Each value carries an integer tag (here: the pair id
    that wrote it) so queries can report which pair achieved the maximum;
    ties keep the lowest tag.
    """

    __slots__ = ("size", "_vals", "_tags")

    def __init__(self, size):
        self.size = size
        self._vals = [0] * (size + 1)  # 1-based internally
        self._tags = [-1] * (size + 1)

    def update(self, col, value, tag=-1):
        """Raise the value stored at ``col`` to at least ``value``."""
        assert 0 <= col < self.size
        vals = self._vals
        tags = self._tags
        pos = col + 1
        size = self.size
        while pos <= size:
            held = vals[pos]
            if value > held or (value == held and tag < tags[pos]):
                vals[pos] = value
                tags[pos] = tag
            pos += pos & -pos
        return self

    def query(self, col):
        """Maximum value written at any column in [0, col]; 0 if none."""
        return self.query_with_tag(col)[0]

    def query_with_tag(self, col):
        """Like ``query`` but also returns the writing pair's tag (-1 if none)."""
        assert 0 <= col < self.size
        vals = self._vals
        tags = self._tags
        best = 0
        best_tag = -1
        pos = col + 1
        while pos > 0:
            held = vals[pos]
            if held > best or (held == best and tags[pos] < best_tag):
                best = held
                best_tag = tags[pos]
            pos -= pos & -pos
        return best, best_tag


@dataclass
class ChainResult:
    """Outcome of a sweep: metric value plus reconstruction material.

    ``dp[p]`` is the best metric value of any chain ending at pair p (in
    lcsk mode this counts segments rather than symbols).  ``back[p]`` is
    None or ("precedes"|"continues", predecessor pair id).  ``pairs`` keeps
    the extracted match pairs so callers can reconstruct without a second
    extraction.
    """

    value: int
    dp: list
    back: list
    best_pair: int | None
    pairs: list = field(default_factory=list)


def sweep(x, y, k, mode=MODE_LCSKPP, max_pairs=None):
    """Compute LCSk++ (or LCSk with ``mode="lcsk"``) between x and y.

    Runs the row-major event sweep: a pair's start reads the best chain
    value among already-finished pairs whose end column is at most its
    start column (the prefix max is inclusive, matching writes at column
    j+k and the precedence condition j_g + k <= j_p); a pair's end first
    tries to continue the pair one step up-left on its diagonal, then
    publishes its value at column j+k.  In lcsk mode continuation is
    disabled and dp counts nonoverlapping exact-k segments.
    """
    require_valid_k(k)
    if mode not in (MODE_LCSKPP, MODE_LCSK):
        raise ValueError(f"unknown mode {mode!r}")
    x = as_symbols(x)
    y = as_symbols(y)
    pairs = find_match_pairs(x, y, k, max_pairs=max_pairs)
    if not pairs:
        return ChainResult(0, [], [], None, pairs)

    events = build_events(pairs, k)
    index = PrefixMaxIndex(len(y) + k + 1)
    npairs = len(pairs)
    dp = [0] * npairs
    back = [None] * npairs
    with_continuation = mode == MODE_LCSKPP
    gain = k if with_continuation else 1

    for row, col, kind, pid in events:
        if kind == EVENT_START:
            best, tag = index.query_with_tag(col)
            if best > 0:
                dp[pid] = gain + best
                back[pid] = (PRECEDES, tag)
            else:
                dp[pid] = gain
        else:
            if with_continuation:
                i, j = pairs[pid]
                g = continuation_lookup(pairs, (i - 1, j - 1))
                if g is not None and dp[g] + 1 >= dp[pid]:
                    dp[pid] = dp[g] + 1
                    back[pid] = (CONTINUES, g)
            index.update(col, dp[pid], pid)

    value = max(dp)
    return ChainResult(value, dp, back, dp.index(value), pairs)


def reconstruct(result, pairs, k):
    """Matched (i, j) index pairs of an optimal chain, ascending in both.

    Walks back-pointers from ``result.best_pair``: the chain's first pair
    and every precedence link contribute all k positions of the pair, a
    continuation link contributes only the pair's final position.  Intended
    for lcskpp-mode results, where the output length equals result.value.
    """
    require_valid_k(k)
    if result.best_pair is None:
        return []
    chain = []
    pid = result.best_pair
    for _ in range(len(pairs)):
        link = result.back[pid]
        chain.append((pid, link))
        if link is None:
            break
        pid = link[1]
    else:
        raise AssertionError("back-pointer chain does not terminate")
    chain.reverse()

    out = []
    prev_pid = None
    for pid, link in chain:
        i, j = pairs[pid]
        if link is None:
            out.extend((i + f, j + f) for f in range(k))
        elif link[0] == PRECEDES:
            assert precedes(pairs[prev_pid], (i, j), k)
            out.extend((i + f, j + f) for f in range(k))
        else:
            assert continues((i, j), pairs[prev_pid], k)
            out.append((i + k - 1, j + k - 1))
        prev_pid = pid
    return out


def lcskpp(x, y, k, max_pairs=None):
    """LCSk++ metric value: longest common subsequence decomposable into
    aligned runs of at least k consecutive positions."""
    return sweep(x, y, k, MODE_LCSKPP, max_pairs=max_pairs).value


def lcsk(x, y, k, max_pairs=None):
    """LCSk metric value: maximal number of nonoverlapping aligned
    matching substrings of length exactly k."""
    return sweep(x, y, k, MODE_LCSK, max_pairs=max_pairs).value
