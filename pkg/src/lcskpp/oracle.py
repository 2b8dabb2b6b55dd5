"""Slow, obviously-correct reference implementations of the string metrics.

Everything here is written for clarity, not speed: full DP tables, direct
substring comparisons, plain loops.  These functions exist so the fast sweep
in :mod:`lcskpp.core` has something independent to be checked against; they
are exported for downstream verification but are not the production path.

Sequences are bytes (or str, taken as latin-1); see ``core.as_symbols``.
"""

from .core import as_symbols, require_valid_k


def lcskpp_dp_table(x, y, k):
    """Full DP table for the k++ subsequence metric, row/col 0 zeroed.

    ``table[i][j]`` is the metric value of the prefixes ``x[:i]`` and
    ``y[:j]``.  Each cell takes the best of: dropping the last symbol of
    either prefix, or extending a shorter prefix pair with a matching
    aligned block of q >= k trailing symbols.  The block scan is capped by
    the longest common suffix of the two prefixes, tracked incrementally.
    """
    require_valid_k(k)
    x = as_symbols(x)
    y = as_symbols(y)
    m, n = len(x), len(y)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    suf = [[0] * (n + 1) for _ in range(m + 1)]  # common-suffix lengths
    for i in range(1, m + 1):
        row = dp[i]
        prev = dp[i - 1]
        for j in range(1, n + 1):
            best = prev[j]
            if row[j - 1] > best:
                best = row[j - 1]
            if x[i - 1] == y[j - 1]:
                run = suf[i - 1][j - 1] + 1
                suf[i][j] = run
                for q in range(k, run + 1):
                    cand = dp[i - q][j - q] + q
                    if cand > best:
                        best = cand
            row[j] = best
    return dp


def lcskpp_dp(x, y, k):
    """Metric value of the k++ common subsequence, by direct DP."""
    return lcskpp_dp_table(x, y, k)[-1][-1]


def lcsk_dp(x, y, k):
    """Maximal count of nonoverlapping matching length-k substrings.

    dp(i,j) = max(dp(i-1,j), dp(i,j-1), dp(i-k,j-k)+1 if the k-length
    substrings ending at i and j are equal).  Substring equality is checked
    by direct slicing, so this stays obviously correct.
    """
    require_valid_k(k)
    x = as_symbols(x)
    y = as_symbols(y)
    m, n = len(x), len(y)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            best = max(dp[i - 1][j], dp[i][j - 1])
            if i >= k and j >= k and x[i - k:i] == y[j - k:j]:
                cand = dp[i - k][j - k] + 1
                if cand > best:
                    best = cand
            dp[i][j] = best
    return dp[m][n]


def lcs_classic(x, y):
    """Textbook quadratic longest-common-subsequence length."""
    x = as_symbols(x)
    y = as_symbols(y)
    m, n = len(x), len(y)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if x[i - 1] == y[j - 1]:
                dp[i][j] = dp[i - 1][j - 1] + 1
            else:
                dp[i][j] = max(dp[i - 1][j], dp[i][j - 1])
    return dp[m][n]


def count_match_pairs_naive(x, y, k):
    """Number of (i, j) with x[i:i+k] == y[j:j+k], by double loop."""
    require_valid_k(k)
    x = as_symbols(x)
    y = as_symbols(y)
    count = 0
    for i in range(len(x) - k + 1):
        window = x[i:i + k]
        for j in range(len(y) - k + 1):
            if window == y[j:j + k]:
                count += 1
    return count


def find_match_pairs_naive(x, y, k):
    """All match pairs by double loop, row-major.  Test oracle for the
    hashed extraction in core."""
    require_valid_k(k)
    x = as_symbols(x)
    y = as_symbols(y)
    pairs = []
    for i in range(len(x) - k + 1):
        window = x[i:i + k]
        for j in range(len(y) - k + 1):
            if window == y[j:j + k]:
                pairs.append((i, j))
    return pairs


def validate_chain(x, y, k, ii, jj):
    """Check that index lists ``ii``/``jj`` realize a k++ common subsequence.

    Accepts iff the lists have equal length, are strictly increasing and in
    range, pair up equal symbols, and decompose into aligned blocks: cutting
    at every position where the two lists do not advance in lockstep (+1 in
    both) must leave every block at least k long.  Returns False for any
    malformed input, True for the empty chain.
    """
    require_valid_k(k)
    x = as_symbols(x)
    y = as_symbols(y)
    ii = list(ii)
    jj = list(jj)
    if len(ii) != len(jj):
        return False
    n = len(ii)
    if n == 0:
        return True
    for t in range(n):
        i, j = ii[t], jj[t]
        if not (0 <= i < len(x) and 0 <= j < len(y)):
            return False
        if x[i] != y[j]:
            return False
        if t > 0 and (i <= ii[t - 1] or j <= jj[t - 1]):
            return False
    block_start = 0
    for t in range(1, n):
        if ii[t] != ii[t - 1] + 1 or jj[t] != jj[t - 1] + 1:
            if t - block_start < k:
                return False
            block_start = t
    return n - block_start >= k
