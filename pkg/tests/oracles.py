"""Reference implementations used only by the tests.

They deliberately share no code with the package: plain edge lists,
brute-force reachability and exact fractions.
"""

import math
from collections import Counter, defaultdict
from fractions import Fraction


def reachable_up(edges, start):
    """BFS over child->parent edges; excludes ``start``."""
    parents = defaultdict(set)
    for c, p in edges:
        parents[c].add(p)
    seen, frontier = set(), [start]
    while frontier:
        nxt = []
        for n in frontier:
            for p in parents[n]:
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    seen.discard(start)
    return seen


def descendant_count(edges, nodes, s):
    return 1 + sum(1 for n in nodes if n != s and s in reachable_up(edges, n))


def mean_children(edges):
    kids = defaultdict(set)
    for c, p in edges:
        kids[p].add(c)
    inner = [len(v) for v in kids.values() if v]
    return Fraction(sum(inner), len(inner)) if inner else Fraction(1)


def density_oracle(edges, nodes, words):
    """Exhaustive greedy conceptual density with exact arithmetic.

    ``words``: word -> list of (sense_id, synset, rank). Returns word -> sense_id.
    """
    nhyp = mean_children(edges)
    up = {n: reachable_up(edges, n) | {n} for n in nodes}
    desc = {n: descendant_count(edges, nodes, n) for n in nodes}
    fixed = {}
    open_words = {w for w, ss in words.items() if ss}
    while open_words:
        scored = []
        for c in nodes:
            members = []
            for w, ss in words.items():
                for s in ([fixed[w]] if w in fixed else ss):
                    if c in up[s[1]]:
                        members.append((w, s))
            ws = {w for w, _ in members}
            if len(ws) < 2 or not ws & open_words:
                continue
            d = sum(nhyp ** i for i in range(len(members))) / desc[c]
            scored.append((d, c, members))
        if not scored:
            break
        top = max(d for d, _, _ in scored)
        d, c, members = min((x for x in scored if x[0] == top), key=lambda x: x[1])
        for w in {w for w, _ in members} & open_words:
            fixed[w] = min((s for ww, s in members if ww == w), key=lambda s: (s[2], s[0]))
            open_words.discard(w)
    return {w: s[0] for w, s in fixed.items()}


def chi2_expected(a, b, c, d):
    """Pearson chi-square as sum((O - E)^2 / E); 0 for degenerate margins."""
    obs = [[a, b], [c, d]]
    rows = [a + b, c + d]
    cols = [a + c, b + d]
    n = sum(rows)
    if 0 in rows or 0 in cols:
        return 0.0
    total = Fraction(0)
    for i in range(2):
        for j in range(2):
            e = Fraction(rows[i] * cols[j], n)
            total += (obs[i][j] - e) ** 2 / e
    return float(total)


def log_odds_table(table, alpha):
    """table: {feature: {sense: count}} over a fixed sense list -> {(f, s): weight}."""
    out = {}
    for f, row in table.items():
        n = len(row)
        tot = sum(row.values())
        for s, c in row.items():
            out[(f, s)] = math.log((c + alpha) / ((tot - c) + alpha * (n - 1)))
    return out


def full_scan(rules, keys, rank):
    """Max-weight applicable rule; ties by sense rank, sense id, kind, value."""
    hits = [r for r in rules if (r.kind, r.value) in keys]
    if not hits:
        return None
    return min(hits, key=lambda r: (-r.weight, rank[r.sense], r.sense, r.kind, r.value))


def multiset_overlap(a, b):
    ca, cb = Counter(a), Counter(b)
    return sum(min(ca[x], cb[x]) for x in ca)
