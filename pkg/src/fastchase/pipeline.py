"""End-to-end decoding of one received word.

The flow is: compute the syndrome, attempt bounded-distance hard-decision
decoding from the root basis, and only if that fails run the Chase
traversal over the test-pattern tree and pick the most likely candidate
under the channel posteriors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .channel import ReliabilityInfo, pick_unreliable, select_best
from .groebner import solve_key_equation
from .grs import GrsCode, syndrome
from .tree import CandidateList, ChaseConfig, TraversalStats, hard_decision_estimate, traverse


@dataclass
class DecodeReport:
    """Outcome of decoding one frame.

    decoded is the selected codeword (tuple) or None when no candidate
    survived; hd_success marks the hard-decision shortcut; candidates and
    stats are populated only when the Chase traversal ran.
    """

    decoded: Optional[tuple]
    hd_success: bool
    candidates: Optional[CandidateList] = None
    stats: Optional[TraversalStats] = None


def decode_frame(
    code: GrsCode,
    y,
    info: ReliabilityInfo,
    eta: int,
    mu: int,
    r_max: int,
    kernel: str = "pairs",
    exhaustive: bool = False,
) -> DecodeReport:
    """Hard-decision first, Chase traversal as fallback."""
    ctx = code.ctx
    S = syndrome(code, y)
    basis = solve_key_equation(code, S)
    hd = hard_decision_estimate(code, S, basis)
    if hd is not None:
        evec = hd.vector(code)
        decoded = tuple(ctx.sub(yi, ei) for yi, ei in zip(y, evec))
        return DecodeReport(decoded, True)
    I, A_sets = pick_unreliable(code, info, eta, mu)
    cfg = ChaseConfig(r_max=r_max, kernel=kernel, exhaustive=exhaustive)
    cands, stats = traverse(code, S, I, A_sets, cfg, basis=basis)
    best = select_best(code, y, cands, info)
    return DecodeReport(best, False, cands, stats)
