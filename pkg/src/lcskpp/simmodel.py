"""Random-string similarity model and k selection.

Two pair classes over a per-position symbol distribution:

* unrelated -- both strings drawn independently, position by position.
* similar   -- one string drawn, the other a mutated copy.  Substitutions
  only, so lengths always match.  ``gen_similar`` takes the realized
  per-position mismatch rate and substitutes a uniformly random different
  symbol; ``PairClass``/``generate_pair`` take the nominal mutation rate,
  under which a mutation resamples from the background alphabet and the
  realized mismatch fraction comes out as e * (1 - S).

The match probability S = sum(p_c^2) drives the expected number of match
pairs, roughly (n + m) + n*m*S^k, and hence the choice of k that keeps the
sparse sweep linear-time in expectation.

All generators run on NumPy's PCG64 generator.  Seeds are plain integers
(or tuples of integers for derived streams); the X string and the mutation
material use separate streams spawned from (seed, role) so they stay
independent.
"""

import math
from dataclasses import dataclass

import numpy as np

UNRELATED = "unrelated"
SIMILAR = "similar"

_ROLE_PRIMARY = 0
_ROLE_SECONDARY = 1


@dataclass(frozen=True)
class AlphabetDistribution:
    """Ordered alphabet with a per-symbol appearance probability."""

    symbols: bytes
    probs: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", bytes(self.symbols))
        object.__setattr__(self, "probs", tuple(float(p) for p in self.probs))
        if len(self.symbols) != len(self.probs):
            raise ValueError("one probability per symbol required")
        if len(self.symbols) < 2:
            raise ValueError("alphabet needs at least 2 symbols")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")
        if any(p < 0 for p in self.probs):
            raise ValueError("probabilities must be nonnegative")
        if abs(sum(self.probs) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {sum(self.probs)}, not 1")


def uniform_distribution(symbols):
    """Uniform distribution over the given symbols."""
    symbols = bytes(symbols) if not isinstance(symbols, str) else symbols.encode("latin-1")
    n = len(symbols)
    return AlphabetDistribution(symbols, (1.0 / n,) * n)


DNA_UNIFORM = uniform_distribution(b"ACGT")

# AT-rich composition (66% A+T), as in many real genomes.  Default
# background of the statistics-table sweep: its collision probability
# S ~ 0.276 matches the match-pair density those statistics assume.
AT_RICH_DNA = AlphabetDistribution(b"ACGT", (0.33, 0.17, 0.17, 0.33))


@dataclass(frozen=True)
class PairClass:
    """Which random model a string pair is drawn from.

    For similar pairs, ``e_similar`` is the nominal per-position mutation
    rate: a mutation resamples the position from the alphabet background,
    so it recreates the original symbol with probability about S and the
    realized mismatch fraction is e_similar * (1 - S).  See
    ``realized_mismatch_rate``.
    """

    kind: str
    e_similar: float | None = None

    def __post_init__(self):
        if self.kind not in (UNRELATED, SIMILAR):
            raise ValueError(f"unknown pair class {self.kind!r}")
        if self.kind == SIMILAR:
            if self.e_similar is None or not 0.0 <= self.e_similar < 1.0:
                raise ValueError("similar pairs need e_similar in [0, 1)")
        elif self.e_similar is not None:
            raise ValueError("unrelated pairs take no e_similar")


def unrelated_class():
    return PairClass(UNRELATED)


def similar_class(e_similar):
    return PairClass(SIMILAR, float(e_similar))


def match_probability(dist):
    """S: probability two independent draws from ``dist`` are equal."""
    return sum(p * p for p in dist.probs)


def mismatch_probability(dist):
    """e_unrelated = 1 - S: per-position mismatch rate of unrelated pairs."""
    return 1.0 - match_probability(dist)


def _stream(seed, role):
    """Deterministic generator for (seed, role); seed is int or int tuple."""
    if isinstance(seed, (int, np.integer)):
        entropy = (int(seed),)
    else:
        entropy = tuple(int(s) for s in seed)
    if any(s < 0 for s in entropy):
        raise ValueError("seed entropy must be nonnegative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy + (role,))))


def _draw(n, dist, rng):
    idx = rng.choice(len(dist.symbols), size=n, p=dist.probs)
    return np.frombuffer(dist.symbols, dtype=np.uint8)[idx]


def gen_unrelated(n, dist, seed):
    """Two independent length-n strings, each position drawn from ``dist``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = _draw(n, dist, _stream(seed, _ROLE_PRIMARY))
    y = _draw(n, dist, _stream(seed, _ROLE_SECONDARY))
    return x.tobytes(), y.tobytes()


def gen_similar(n, dist, e_similar, seed):
    """A length-n string and its substitution-mutated copy.

    Each position of the copy is replaced, independently with probability
    ``e_similar``, by a uniformly random different symbol, so the observed
    per-position mismatch rate estimates e_similar.  Requires
    e_similar < e_unrelated, otherwise the classes are not distinguishable.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    e_similar = float(e_similar)
    e_unrelated = mismatch_probability(dist)
    if not 0.0 <= e_similar < e_unrelated:
        raise ValueError(
            f"e_similar must lie in [0, {e_unrelated}) for this alphabet, got {e_similar}"
        )
    x = _draw(n, dist, _stream(seed, _ROLE_PRIMARY))
    rng = _stream(seed, _ROLE_SECONDARY)
    mutate = rng.random(n) < e_similar
    y = x.copy()
    hits = int(mutate.sum())
    if hits:
        nsym = len(dist.symbols)
        lut = np.zeros(256, dtype=np.int64)
        lut[np.frombuffer(dist.symbols, dtype=np.uint8)] = np.arange(nsym)
        shifted = (lut[x[mutate]] + 1 + rng.integers(0, nsym - 1, size=hits)) % nsym
        y[mutate] = np.frombuffer(dist.symbols, dtype=np.uint8)[shifted]
    return x.tobytes(), y.tobytes()


def realized_mismatch_rate(e_nominal, dist):
    """Mismatch fraction produced by a nominal mutation rate.

    A mutation event resamples the position from the alphabet background,
    which lands back on the original symbol with probability ~S, so only
    e * (1 - S) of all positions end up different.  This is the rate to
    hand to ``gen_similar`` when a pair class is given nominally.
    """
    return e_nominal * mismatch_probability(dist)


def generate_pair(n, dist, pair_class, seed):
    """Dispatch to the generator matching ``pair_class``.

    Similar pairs interpret ``pair_class.e_similar`` nominally and are
    generated at the realized mismatch rate (see PairClass).
    """
    if pair_class.kind == UNRELATED:
        return gen_unrelated(n, dist, seed)
    return gen_similar(n, dist, realized_mismatch_rate(pair_class.e_similar, dist), seed)


def expected_match_pairs(n, m, k, dist):
    """Budget estimate of the match-pair count: (n + m) + n*m*S^k.

    The product term dominates off-diagonal matches; the linear term is an
    allowance for the correlated diagonal.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    s = match_probability(dist)
    return float(n + m) + float(n) * float(m) * s ** k


def k_fast(n, m, dist):
    """Smallest integer k making the expected match-pair count linear.

    ceil(log(n*m/(n+m)) / log(1/S)), clamped to at least 1.  Larger
    alphabets give smaller S and therefore a smaller (never larger) k.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    s = match_probability(dist)
    if s >= 1.0:
        raise ValueError("degenerate distribution: S must be < 1")
    ratio = (n * m) / (n + m)
    k = math.ceil(math.log(ratio) / math.log(1.0 / s))
    return max(1, k)
