"""Chase test-pattern tree and its depth-first traversal.

The tree for unreliable locators I = (alpha_1..alpha_eta) with hypothesis
sets A_1..A_eta has as depth-r nodes the weight-r test patterns (choices of
r distinct positions with one value each).  The parent of a pattern zeroes
its nonzero entry of largest position index; children therefore extend a
pattern only at indices beyond its current maximum, and a depth-first walk
keeps at most r_max+1 kernel states alive.

Candidate detection at a depth-r node checks that the tracked leading
monomial of g1 is (0, X^(t+r)) and that the right component has exactly
t+r distinct zeros over the domain; error values then come from the
derivative/left evaluations (Forney), must all be nonzero, and the
resulting estimate must reproduce the syndrome.

Heuristic mode avoids per-node root searches: the (free) leading-monomial
degree check gates the search, and additionally a zero-discrepancy edge
trigger is honored: if g1 was unchanged by both iterations of the incoming
edge (both discrepancies zero) and the current ELP estimate shares no root
with its derivative on the pattern locations (which would indicate an
indirect hit with squared factors), the node is also examined.  Both modes
accept exactly the same candidates; the trigger statistics are reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .grs import ErrorEstimate, GrsCode, syndrome_consistent
from .groebner import GroebnerPairBasis, solve_key_equation
from .kernels import EdgeMod, EdgeReport, get_kernel
from .poly import Poly


@dataclass
class ChaseConfig:
    r_max: int
    kernel: str = "pairs"
    exhaustive: bool = False
    record_edges: bool = False


@dataclass
class Candidate:
    estimate: ErrorEstimate
    pattern: tuple
    depth: int


class CandidateList:
    """Deduplicated (by error vector) list of candidates in emission order."""

    def __init__(self, code: GrsCode) -> None:
        self.code = code
        self.items: list[Candidate] = []
        self._vectors: set = set()

    def add(self, estimate: ErrorEstimate, pattern: tuple, depth: int) -> bool:
        vec = estimate.vector(self.code)
        if vec in self._vectors:
            return False
        self._vectors.add(vec)
        self.items.append(Candidate(estimate, pattern, depth))
        return True

    def vectors(self) -> set:
        return set(self._vectors)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


@dataclass
class TraversalStats:
    edges: int = 0
    nodes_checked: int = 0
    peak_depth: int = 0
    cond1_triggers: int = 0
    cond2_rejections: int = 0
    mults: int = 0
    edge_records: list = dc_field(default_factory=list)


def build_tree(eta: int, A_sets, r_max: int):
    """Yield all nonroot test patterns in depth-first preorder.

    A pattern is a tuple of (position_index, value); the parent of a
    pattern is the pattern without its last entry (the largest index).
    """

    def rec(prefix, last):
        for idx in range(last + 1, eta):
            for beta in A_sets[idx]:
                node = prefix + ((idx, beta),)
                yield node
                if len(node) < r_max:
                    yield from rec(node, idx)

    yield from rec((), -1)


def extract_candidate(kernel, state, code: GrsCode, expected: int) -> Optional[ErrorEstimate]:
    """Candidate condition plus value extraction at one node.

    expected is the required ELP degree (t + depth).  Returns None unless
    the tracked degree matches, the right component has exactly `expected`
    distinct zeros over the domain, and all extracted values are nonzero.
    """
    if expected <= 0 or kernel.elp_degree(state) != expected:
        return None
    spectrum = kernel.elp_spectrum(state)
    zero_coords = [i for i, val in enumerate(spectrum) if val == 0]
    if len(zero_coords) != expected:
        return None
    values = kernel.error_values(state, zero_coords)
    if values is None or any(v == 0 for v in values):
        return None
    return ErrorEstimate(
        tuple(code.locator_of(i) for i in zero_coords), tuple(values)
    )


def candidate_condition(kernel, state, code: GrsCode, depth: int) -> bool:
    """Degree-and-root-count check of the node estimate at depth r."""
    expected = code.t + depth
    if kernel.elp_degree(state) != expected:
        return False
    spectrum = kernel.elp_spectrum(state)
    return sum(1 for val in spectrum if val == 0) == expected


def stopping_criterion(kernel, state, report: EdgeReport, pattern, code: GrsCode) -> bool:
    """Zero-discrepancy trigger for the incoming edge.

    Condition 1: the incoming edge left g1 unchanged in both iterations
    (both g1-discrepancies zero).  Condition 2 (checked only then): the ELP
    estimate and its derivative share no root among the pattern locations,
    which would indicate squared factors from an indirect hit rather than
    a settled true locator polynomial.
    """
    if report.delta_root[1] != 0:
        return False
    if report.delta_der is None or report.delta_der[1] != 0:
        return False
    ctx = code.ctx
    for alpha, _beta in pattern:
        val, dval = kernel.sigma_value_and_deriv(state, code.coord_of(alpha))
        if val == 0 and dval == 0:
            return False
    return True


def traverse(
    code: GrsCode,
    S: Poly,
    I,
    A_sets,
    cfg: ChaseConfig,
    basis: Optional[GroebnerPairBasis] = None,
) -> tuple[CandidateList, TraversalStats]:
    """Depth-first Chase traversal; returns candidates and statistics."""
    ctx = code.ctx
    kernel = get_kernel(cfg.kernel)
    if basis is None:
        basis = solve_key_equation(code, S)
    state0 = kernel.start(code, S, basis, locators=tuple(I))
    cands = CandidateList(code)
    stats = TraversalStats()
    t = code.t
    eta = len(I)
    mults = [ctx.counter.mults]

    def check_node(state, depth, pattern):
        stats.nodes_checked += 1
        est = extract_candidate(kernel, state, code, t + depth)
        if est is not None and syndrome_consistent(code, S, est):
            cands.add(est, pattern, depth)

    check_node(state0, 0, ())

    def rec(state, depth, last_idx, pattern):
        stats.peak_depth = max(stats.peak_depth, depth)
        if depth == cfg.r_max:
            return
        for idx in range(last_idx + 1, eta):
            alpha = I[idx]
            a = code.multipliers[code.coord_of(alpha)]
            for beta in A_sets[idx]:
                before = ctx.counter.mults
                child, report = kernel.apply_edge(state, EdgeMod(alpha, beta, a))
                stats.edges += 1
                child_pattern = pattern + ((alpha, beta),)
                triggered = stopping_criterion(kernel, child, report, child_pattern, code)
                if report.delta_root[1] == 0 and (
                    report.delta_der is not None and report.delta_der[1] == 0
                ):
                    stats.cond1_triggers += 1
                    if not triggered:
                        stats.cond2_rejections += 1
                degree_hit = kernel.elp_degree(child) == t + depth + 1
                if cfg.record_edges:
                    stats.edge_records.append(
                        (child_pattern, report, ctx.counter.mults - before)
                    )
                if cfg.exhaustive or degree_hit or triggered:
                    check_node(child, depth + 1, child_pattern)
                rec(child, depth + 1, idx, child_pattern)

    rec(state0, 0, -1, ())
    stats.mults = ctx.counter.mults - mults[0]
    return cands, stats


def hard_decision_estimate(
    code: GrsCode, S: Poly, basis: Optional[GroebnerPairBasis] = None
) -> Optional[ErrorEstimate]:
    """Bounded-distance estimate from the root basis (up to t errors)."""
    if S.is_zero():
        return ErrorEstimate((), ())
    if basis is None:
        basis = solve_key_equation(code, S)
    kernel = get_kernel("pairs")
    from .kernels import PairState

    state = PairState(code, basis)
    deg = kernel.elp_degree(state)
    if not isinstance(deg, int) or deg > code.t:
        return None
    est = extract_candidate(kernel, state, code, deg)
    if est is not None and syndrome_consistent(code, S, est):
        return est
    return None


def gmd_traverse(
    code: GrsCode,
    S: Poly,
    erasure_locators,
    kernel_name: str = "pairs",
    basis: Optional[GroebnerPairBasis] = None,
) -> CandidateList:
    """Errors-and-erasures chain: one root-only update per erased locator.

    At each depth the current estimate is accepted whenever its tracked
    degree matches its distinct root count and the extracted values are
    nonzero (no degree/depth coupling: erasures adjoin locations without
    values, so the estimate degree is not forced up to t + depth)."""
    kernel = get_kernel(kernel_name)
    if basis is None:
        basis = solve_key_equation(code, S)
    state = kernel.start(code, S, basis, locators=tuple(erasure_locators))
    cands = CandidateList(code)

    def check(state, pattern, depth):
        deg = kernel.elp_degree(state)
        if isinstance(deg, int) and deg >= 0:
            est = extract_candidate(kernel, state, code, deg) if deg else None
            if deg == 0 and S.is_zero():
                est = ErrorEstimate((), ())
            if est is not None and syndrome_consistent(code, S, est):
                cands.add(est, pattern, depth)

    check(state, (), 0)
    pattern = ()
    for depth, alpha in enumerate(erasure_locators, start=1):
        state, _report = kernel.apply_erasure(state, alpha)
        pattern = pattern + ((alpha, None),)
        check(state, pattern, depth)
    return cands


def verify_indirect_hit(
    code: GrsCode,
    S: Poly,
    true_error: ErrorEstimate,
    pattern,
    basis: Optional[GroebnerPairBasis] = None,
) -> tuple[bool, Poly, Poly]:
    """Check the closed form of g1 at a node whose pattern is a mix of
    correct pairs, wrong-value pairs at true error locations, and wrong
    locations.

    With S2 = wrong-value pairs at error locations and S1 = pairs at
    non-error locations, and enough correct pairs (r - |S| >= eps - t +
    |S1|), the node's g1 must be a nonzero scalar multiple of

        (omega, sigma) * prod_{S2}(X - alpha^-1) * prod_{S1}(X - alpha^-1)^2

    and must be the minimal basis element.  Returns (ok, predicted_sigma,
    actual_sigma) with both polynomials made monic.
    """
    from .grs import elp_eep_of

    ctx = code.ctx
    if basis is None:
        basis = solve_key_equation(code, S)
    kernel = get_kernel("pairs")
    state = kernel.start(code, S, basis)
    for alpha, beta in pattern:
        a = code.multipliers[code.coord_of(alpha)]
        state, _ = kernel.apply_edge(state, EdgeMod(alpha, beta, a))

    error_locs = dict(zip(true_error.locators, true_error.values))
    sigma, omega = elp_eep_of(code, true_error)
    extra = Poly.one(ctx)
    for alpha, beta in pattern:
        if alpha in error_locs:
            if beta != error_locs[alpha]:
                extra = extra.mul_linear(ctx.inv(alpha))  # S2: one factor
        else:
            ainv = ctx.inv(alpha)
            extra = extra.mul_linear(ainv).mul_linear(ainv)  # S1: squared factor

    predicted_v = sigma.mul(extra)
    predicted_u = omega.mul(extra)
    actual_v = state.basis.g1.v
    actual_u = state.basis.g1.u
    b = state.basis
    from .groebner import monomial_less

    is_minimal = monomial_less(b.lm1(), b.lm0(), b.w)
    ok = is_minimal and not actual_v.is_zero() and not predicted_v.is_zero()
    if ok:
        # one common nonzero scalar must relate the actual pair to the
        # predicted pair
        c = ctx.div(actual_v.leading_coeff(), predicted_v.leading_coeff())
        ok = actual_v == predicted_v.scale(c) and actual_u == predicted_u.scale(c)
    return ok, predicted_v.monic(), actual_v.monic()
