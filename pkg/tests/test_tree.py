"""Test-pattern tree, traversal, hard-decision decoding, and GMD chains."""

import itertools
import random

from fastchase import (
    ChaseConfig,
    ErrorEstimate,
    FieldCtx,
    GrsCode,
    encode,
    gmd_traverse,
    hard_decision_estimate,
    solve_key_equation,
    syndrome,
    traverse,
    unit_multipliers,
    verify_indirect_hit,
)
from fastchase.tree import build_tree


def make_code(m, d):
    ctx = FieldCtx(m)
    return GrsCode(ctx, d, unit_multipliers(ctx))


def test_build_tree_nodes_and_preorder():
    A_sets = [[1, 2], [5], [3, 4, 6]]
    r_max = 2
    nodes = list(build_tree(3, A_sets, r_max))
    # expected: all value assignments on index subsets of size 1..r_max
    expected = set()
    for size in range(1, r_max + 1):
        for idxs in itertools.combinations(range(3), size):
            for vals in itertools.product(*(A_sets[i] for i in idxs)):
                expected.add(tuple(zip(idxs, vals)))
    assert len(nodes) == len(set(nodes)) == len(expected)
    assert set(nodes) == expected
    # preorder: every node's parent (prefix) appears before it
    seen = {()}
    for node in nodes:
        assert node[:-1] in seen
        seen.add(node)
    # indices strictly increase along every pattern
    for node in nodes:
        idxs = [i for i, _ in node]
        assert idxs == sorted(set(idxs))


def test_hard_decision_within_radius():
    rng = random.Random(0)
    for m, d in ((3, 5), (4, 7)):
        code = make_code(m, d)
        ctx = code.ctx
        for _ in range(50):
            msg = [rng.randrange(ctx.q) for _ in range(code.k)]
            cw = encode(code, msg)
            y = list(cw)
            wt = rng.randrange(0, code.t + 1)
            errs = {}
            for i in rng.sample(range(code.n), wt):
                errs[i] = rng.randrange(1, ctx.q)
                y[i] = ctx.add(y[i], errs[i])
            est = hard_decision_estimate(code, syndrome(code, y))
            assert est is not None
            assert est.vector(code) == tuple(
                errs.get(i, 0) for i in range(code.n)
            )


def test_hard_decision_beyond_radius_is_never_wrong_silently():
    # with more than t errors the estimate is either None or a consistent
    # estimate of weight <= t (a miscorrection onto another codeword)
    rng = random.Random(1)
    code = make_code(3, 5)
    ctx = code.ctx
    for _ in range(100):
        msg = [rng.randrange(8) for _ in range(code.k)]
        y = list(encode(code, msg))
        for i in rng.sample(range(code.n), code.t + 1):
            y[i] ^= rng.randrange(1, 8)
        S = syndrome(code, y)
        est = hard_decision_estimate(code, S)
        if est is not None:
            assert est.weight() <= code.t
            from fastchase import syndrome_consistent

            assert syndrome_consistent(code, S, est)


def plant(code, rng, eps, r, eta=4):
    """Instance with eps errors, r of them covered by correct hypotheses."""
    ctx = code.ctx
    msg = [rng.randrange(ctx.q) for _ in range(code.k)]
    cw = encode(code, msg)
    y = list(cw)
    coords = rng.sample(range(code.n), eps)
    truth = {}
    for i in coords:
        truth[i] = rng.randrange(1, ctx.q)
        y[i] = ctx.add(y[i], truth[i])
    covered = rng.sample(coords, r)
    others = rng.sample([i for i in range(code.n) if i not in coords], eta - r)
    positions = covered + others
    rng.shuffle(positions)
    I = [code.locator_of(i) for i in positions]
    A_sets = [[truth[i]] if i in covered else [rng.randrange(1, ctx.q)] for i in positions]
    evec = tuple(truth.get(i, 0) for i in range(code.n))
    return y, evec, I, A_sets


def test_traverse_finds_planted_direct_hits():
    rng = random.Random(2)
    code = make_code(4, 7)
    for r in (0, 1, 2):
        for _ in range(20):
            y, evec, I, A_sets = plant(code, rng, code.t + r, r)
            S = syndrome(code, y)
            cands, stats = traverse(code, S, I, A_sets, ChaseConfig(r_max=2))
            assert evec in cands.vectors()
            assert stats.peak_depth <= 2


def test_traversal_stats_edge_count():
    rng = random.Random(3)
    code = make_code(3, 5)
    y, evec, I, A_sets = plant(code, rng, code.t + 1, 1, eta=3)
    S = syndrome(code, y)
    _, stats = traverse(code, S, I, A_sets, ChaseConfig(r_max=2, record_edges=True))
    # singleton hypothesis sets: edges = patterns of depth 1..2 over 3 indices
    assert stats.edges == 3 + 3
    assert len(stats.edge_records) == stats.edges


def test_gmd_traverse_recovers_within_half_extra_radius():
    # with r erasures placed on true error locations, recovery is
    # guaranteed for eps <= t + r/2
    rng = random.Random(4)
    code = make_code(4, 7)
    ctx = code.ctx
    for r, extra in ((1, 0), (2, 1)):
        hits = 0
        trials = 30
        for _ in range(trials):
            msg = [rng.randrange(16) for _ in range(code.k)]
            cw = encode(code, msg)
            y = list(cw)
            coords = rng.sample(range(code.n), code.t + extra)
            for i in coords:
                y[i] = ctx.add(y[i], rng.randrange(1, 16))
            erase = [code.locator_of(i) for i in coords[:r]]
            S = syndrome(code, y)
            cands = gmd_traverse(code, S, erase)
            evec = tuple(ctx.sub(a, b) for a, b in zip(y, cw))
            if evec in cands.vectors():
                hits += 1
        assert hits == trials


def test_verify_indirect_hit_wrong_value_and_wrong_location():
    ctx = FieldCtx(4)
    code = GrsCode(ctx, 7, unit_multipliers(ctx))
    rng = random.Random(5)
    for kind in ("wrong_value", "wrong_location"):
        for _ in range(10):
            msg = [rng.randrange(16) for _ in range(code.k)]
            y = list(encode(code, msg))
            eps = code.t + (2 if kind == "wrong_value" else 1)
            locs = rng.sample(range(code.n), eps)
            truth = {}
            for i in locs:
                truth[i] = rng.randrange(1, 16)
                y[i] ^= truth[i]
            S = syndrome(code, y)
            true_err = ErrorEstimate(
                tuple(code.locator_of(i) for i in locs),
                tuple(truth[i] for i in locs),
            )
            chosen = rng.sample(locs, 3)
            if kind == "wrong_value":
                pattern = [(code.locator_of(i), truth[i]) for i in chosen[:-1]]
                wrong = rng.randrange(1, 16)
                while wrong == truth[chosen[-1]]:
                    wrong = rng.randrange(1, 16)
                pattern.append((code.locator_of(chosen[-1]), wrong))
            else:
                pattern = [(code.locator_of(i), truth[i]) for i in chosen[:-1]]
                spare = rng.choice([i for i in range(code.n) if i not in locs])
                pattern.append((code.locator_of(spare), rng.randrange(1, 16)))
            ok, predicted, actual = verify_indirect_hit(code, S, true_err, pattern)
            assert ok
            assert predicted.coeffs == actual.coeffs
