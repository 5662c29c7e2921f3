"""Walk through decoding one noisy frame, step by step.

A (15, 9) code over GF(16) corrects t = 3 errors by hard decision alone.
This demo plants t + 2 = 5 errors, shows hard decision failing, and then
runs the Chase traversal: the two least-reliable coordinates carry the
true error values as hypotheses, so the transmitted codeword appears in
the candidate list at depth 2.
"""

import random

from fastchase import (
    ChaseConfig,
    FieldCtx,
    GrsCode,
    encode,
    hard_decision_estimate,
    pick_unreliable,
    select_best,
    solve_key_equation,
    syndrome,
    traverse,
    unit_multipliers,
)
from fastchase.channel import ReliabilityInfo

rng = random.Random(1)
ctx = FieldCtx(4)
code = GrsCode(ctx, 7, unit_multipliers(ctx))
print(f"code: n={code.n}, k={code.k}, d={code.d}, t={code.t} over GF({ctx.q})")

message = [rng.randrange(ctx.q) for _ in range(code.k)]
codeword = encode(code, message)
print("codeword: ", codeword)

# plant t+2 errors; pretend the demodulator flags two of them as shaky
error_coords = rng.sample(range(code.n), code.t + 2)
y = list(codeword)
truth = {}
for i in error_coords:
    truth[i] = rng.randrange(1, ctx.q)
    y[i] = ctx.add(y[i], truth[i])
print("received: ", y, f"({len(error_coords)} errors at {sorted(error_coords)})")

flagged = error_coords[:2]
posteriors = []
scores = []
for i in range(code.n):
    top = 0.45 if i in flagged else 0.95
    rest = (1.0 - top) / (ctx.q - 1)
    row = [rest] * ctx.q
    row[y[i]] = top
    if i in flagged:  # runner-up mass on the transmitted symbol
        row[codeword[i]] = rest * 6
        total = sum(row)
        row = [x / total for x in row]
    posteriors.append(row)
    ordered = sorted(row, reverse=True)
    scores.append(ordered[0] - ordered[1])
info = ReliabilityInfo(hard=list(y), posteriors=posteriors, scores=scores)

S = syndrome(code, y)
print("syndrome coefficients:", list(S.coeffs))
basis = solve_key_equation(code, S)
hd = hard_decision_estimate(code, S, basis)
print("hard decision:", "success" if hd is not None else
      "failure (more than t errors)")

I, A_sets = pick_unreliable(code, info, eta=4, mu=2)
print("unreliable locators:", I)
print("hypothesis sets:    ", A_sets)

candidates, stats = traverse(code, S, I, A_sets, ChaseConfig(r_max=2), basis=basis)
print(f"traversal: {stats.edges} edges, {stats.nodes_checked} nodes checked, "
      f"{stats.mults} field multiplications")
for idx, cand in enumerate(candidates):
    print(f"  candidate {idx}: depth {cand.depth}, "
          f"locators {cand.estimate.locators}, values {cand.estimate.values}")

best = select_best(code, y, candidates, info)
print("selected codeword:", list(best) if best else None)
print("matches transmitted codeword:", list(best) == list(codeword))
