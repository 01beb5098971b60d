"""Monte-Carlo harness for random affine network coding with deletions.

Inner nodes forward affine combinations of their surviving inputs
(coefficients summing to 1), so every vector reaching the sink stays
inside the sent block's coset; the receiver closes the sink vectors
into a flat and decodes by containment.

Randomness comes from SplitMix64, seeded per trial from (seed, trial
index), so trials are independent substreams and aggregate stats do not
depend on execution order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import codes, flatspace
from .design import FlatFamily
from .flatspace import aff_closure, vec_add, vec_scale

RNG_ID = "splitmix64"

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 PRNG; tiny, seedable, and reproducible across languages."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def chance(self, prob: Fraction) -> bool:
        """Bernoulli draw with an exact rational probability."""
        if prob <= 0:
            return False
        if prob >= 1:
            return True
        return self.below(prob.denominator) < prob.numerator


def trial_rng(seed: int, index: int) -> SplitMix64:
    """Independent substream for one trial."""
    mixer = SplitMix64((seed & _MASK) ^ ((index + 1) * _GAMMA) & _MASK)
    return SplitMix64(mixer.next_u64())


@dataclass(frozen=True)
class NetworkConfig:
    layers: int = 1
    width: int = 4
    indegree: int = 2
    drop_prob: Fraction = Fraction(0)
    sink_indegree: int = 4

    def __post_init__(self):
        if self.layers < 1 or self.width < 1 or self.indegree < 1:
            raise ValueError("layers, width and indegree must all be >= 1")
        if self.sink_indegree < 1:
            raise ValueError("sink_indegree must be >= 1")
        p = Fraction(self.drop_prob)
        if not 0 <= p <= 1:
            raise ValueError("drop_prob must be in [0, 1]")
        object.__setattr__(self, "drop_prob", p)


@dataclass(frozen=True)
class TrialStats:
    trials: int
    successes: int
    ambiguities: int
    erasures: int
    mean_received_rank: Fraction
    seed: int

    def render(self) -> str:
        """Flat key=value text block, exact numbers only."""
        lines = [
            f"trials={self.trials}",
            f"successes={self.successes}",
            f"ambiguities={self.ambiguities}",
            f"erasures={self.erasures}",
            f"mean_received_rank={self.mean_received_rank.numerator}"
            f"/{self.mean_received_rank.denominator}",
            f"seed={self.seed}",
            f"rng-id={RNG_ID}",
        ]
        return "\n".join(lines) + "\n"


def random_affine_coeffs(rng: SplitMix64, K, s: int):
    """s coefficients summing to 1: first s-1 uniform, last forced."""
    if s < 1:
        raise ValueError("need at least one coefficient")
    coeffs = [rng.below(K.order) for _ in range(s - 1)]
    total = 0
    for c in coeffs:
        total = K.add(total, c)
    coeffs.append(K.sub(1, total))
    return coeffs


def propagate(cfg: NetworkConfig, spec, sources, rng: SplitMix64):
    """Push vectors through the layered DAG; returns the sink vectors.

    Each node samples cfg.indegree edges from the previous layer; an
    edge delivers nothing with probability drop_prob or when its tail
    node holds nothing.  A node with no surviving inputs emits nothing.
    """
    if not sources:
        raise ValueError("propagate needs at least one source vector")
    prev = list(sources)

    def gather(n_edges, pool):
        got = []
        for _ in range(n_edges):
            v = pool[rng.below(len(pool))]
            if v is not None and not rng.chance(cfg.drop_prob):
                got.append(v)
        return got

    for _ in range(cfg.layers):
        layer = []
        for _node in range(cfg.width):
            inputs = gather(cfg.indegree, prev)
            if not inputs:
                layer.append(None)
                continue
            lam = random_affine_coeffs(rng, spec, len(inputs))
            acc = (0,) * len(inputs[0])
            for c, v in zip(lam, inputs):
                if c:
                    acc = vec_add(spec, acc, vec_scale(spec, c, v))
            layer.append(acc)
        prev = layer
    return gather(cfg.sink_indegree, prev)


def _block_generators(block):
    """k affinely independent points: rep and rep + each basis row."""
    pts = [block.rep]
    for row in block.dir.rows:
        pts.append(vec_add(block.spec, block.rep, row))
    return pts


def run_trials(code: FlatFamily, cfg: NetworkConfig, trials: int, seed: int,
               forced_deletions: int | None = None) -> TrialStats:
    """Monte-Carlo decode statistics; deterministic given the seed.

    forced_deletions switches from the random DAG to the exact deletion
    model: exactly that many direction vectors, chosen at random, are
    withheld from the receiver.
    """
    if not code.blocks:
        raise ValueError("empty code")
    g = code.geometry
    if g.kind != "affine":
        raise ValueError("the simulator models affine network coding")
    K = g.field
    successes = ambiguities = erasures = 0
    rank_total = 0
    for i in range(trials):
        rng = trial_rng(seed, i)
        block = code.blocks[rng.below(len(code.blocks))]
        points = _block_generators(block)
        if forced_deletions is not None:
            keep = list(range(1, len(points)))
            for _ in range(forced_deletions):
                keep.pop(rng.below(len(keep)))
            received_pts = [points[0]] + [points[j] for j in keep]
        else:
            received_pts = propagate(cfg, K, points, rng)
        if not received_pts:
            erasures += 1
            continue
        received = aff_closure(
            [flatspace.VectorFq(K, p) for p in received_pts])
        if not block.contains(received):
            raise AssertionError("closure invariant violated: received not in block")
        rank_total += received.rank
        try:
            decoded = codes.decode(code, received)
        except codes.Ambiguity:
            ambiguities += 1
            continue
        except codes.Erasure:
            erasures += 1
            continue
        if decoded != block:
            raise AssertionError("decoder returned a wrong block")
        successes += 1
    mean = Fraction(rank_total, trials) if trials else Fraction(0)
    return TrialStats(trials, successes, ambiguities, erasures, mean, seed)
