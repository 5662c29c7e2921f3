"""Symbol channels, reliability extraction, and candidate selection.

Two channel models:

  * QSymmetricChannel(p): each symbol is replaced, with probability p, by a
    uniformly random different symbol.  Posteriors are 1-p on the received
    symbol and p/(q-1) elsewhere, so every coordinate is equally reliable
    and list selection reduces to minimum Hamming distance.
  * SoftSymmetricChannel(p): same error events, but each coordinate also
    carries a synthetic posterior vector whose peak is the received symbol
    and whose gap to the runner-up is stochastically smaller on error
    coordinates; on errors the transmitted symbol tends to be the
    runner-up.  This gives the Chase decoder genuine soft information.

Reliability score of a coordinate is the posterior gap between its two most
likely symbols; ties break on the lower coordinate index.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .grs import GrsCode


@dataclass
class ReliabilityInfo:
    hard: tuple  # hard-decision word (the received word)
    posteriors: list  # per coordinate: list of length q, sums to 1
    scores: list  # per coordinate: gap between top two posteriors


def _gap_scores(posteriors) -> list:
    scores = []
    for row in posteriors:
        top2 = sorted(row, reverse=True)[:2]
        scores.append(top2[0] - top2[1])
    return scores


@dataclass
class QSymmetricChannel:
    p: float

    def transmit(self, code: GrsCode, codeword, rng: random.Random):
        q = code.ctx.q
        received = []
        posteriors = []
        off = self.p / (q - 1)
        for c in codeword:
            r = c
            if rng.random() < self.p:
                r = rng.randrange(q - 1)
                r = r if r < c else r + 1
            received.append(r)
            row = [off] * q
            row[r] = 1.0 - self.p
            posteriors.append(row)
        return tuple(received), ReliabilityInfo(tuple(received), posteriors, _gap_scores(posteriors))


@dataclass
class SoftSymmetricChannel:
    p: float

    def transmit(self, code: GrsCode, codeword, rng: random.Random):
        q = code.ctx.q
        received = []
        posteriors = []
        for c in codeword:
            erred = rng.random() < self.p
            if erred:
                r = rng.randrange(q - 1)
                r = r if r < c else r + 1
                peak = 0.35 + 0.35 * rng.random()
                second_sym = c
                second = peak * (0.5 + 0.45 * rng.random())
            else:
                r = c
                peak = 0.7 + 0.29 * rng.random()
                second_sym = rng.randrange(q - 1)
                second_sym = second_sym if second_sym < r else second_sym + 1
                second = (1.0 - peak) * (0.2 + 0.6 * rng.random())
            rest = (1.0 - peak - second) / (q - 2)
            row = [rest] * q
            row[r] = peak
            row[second_sym] = second
            received.append(r)
            posteriors.append(row)
        return tuple(received), ReliabilityInfo(tuple(received), posteriors, _gap_scores(posteriors))


def pick_unreliable(code: GrsCode, info: ReliabilityInfo, eta: int, mu: int):
    """Locators of the eta least reliable coordinates with their hypothesis sets.

    Returns (I, A_sets): I lists locators ordered by ascending reliability
    (ties on lower coordinate index); A_i holds the error-value hypotheses
    beta = s - y_i for the mu-1 most probable alternative symbols s (ties
    on lower symbol value).
    """
    ctx = code.ctx
    order = sorted(range(code.n), key=lambda i: (info.scores[i], i))
    I = []
    A_sets = []
    for i in order[:eta]:
        I.append(code.locator_of(i))
        row = info.posteriors[i]
        hard = info.hard[i]
        alts = sorted((s for s in range(ctx.q) if s != hard), key=lambda s: (-row[s], s))
        A_sets.append([ctx.sub(s, hard) for s in alts[: mu - 1]])
    return I, A_sets


def select_best(code: GrsCode, y, candidates, info: ReliabilityInfo):
    """Most likely codeword among candidate error estimates, or None.

    Score is the posterior log-likelihood of the implied codeword; the
    first candidate in list order wins ties.
    """
    ctx = code.ctx
    best = None
    best_score = -math.inf
    for cand in candidates:
        evec = cand.estimate.vector(code)
        cw = tuple(ctx.sub(yi, ei) for yi, ei in zip(y, evec))
        score = 0.0
        for i, c in enumerate(cw):
            score += math.log(max(info.posteriors[i][c], 1e-300))
        if score > best_score:
            best_score = score
            best = cw
    return best
