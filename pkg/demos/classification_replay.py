"""Full case analysis for 5 <= n <= 11 plus a replay of the reference numbers."""

from collections import Counter

from quadricfano import CheckStatus, Outcome, RunConfig, classify, emit_report, verify_paper

records = classify(RunConfig(workers=4))
print(Counter(str(r.outcome) for r in records))

survivors = [r for r in records if r.outcome not in (Outcome.SPLIT, Outcome.EXCLUDED)]
for r in survivors:
    print(r.key, r.outcome)
    for v in r.verdicts:
        print("   ", v.filter_id, v.status)

# which filter decided each negative-discriminant record
deciders = Counter(r.verdicts[-1].filter_id for r in records if r.branch.value == "discriminant_neg")
print(deciders)

print(emit_report(records=[r for r in records if r.n == 6 and r.c1 == 0 and r.c2 in (2, 3, 4)], format="markdown"))

checks = verify_paper()
print(Counter(str(c.status) for c in checks))
for c in checks:
    if c.status is not CheckStatus.AGREE:
        print(f"{c.claim_id}: printed {c.paper_value}, recomputed {c.recomputed_value}")
        print("   ", c.conclusion)

# n >= 12 goes through the sine bound instead
big = classify(RunConfig(n_min=12, n_max=14, c2_max=3))
print(Counter(str(r.outcome) for r in big))
