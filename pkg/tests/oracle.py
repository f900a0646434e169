"""Independent oracles for the test suite.

These deliberately avoid the library's automaton pipeline: the language
oracle is a direct denotational recursion over the AST, and the partition
oracle enumerates subsets with itertools.  Expected values in the tests are
frozen from (or re-checked against) these.
"""

from itertools import combinations

from crekit.syntax import Alt, Concat, Epsilon, Rep, Symbol


def brute_language(e, max_len):
    """All words of L(e) with length <= max_len, by structural recursion."""
    if isinstance(e, Symbol):
        return {(e.name,)} if max_len >= 1 else set()
    if isinstance(e, Epsilon):
        return {()}
    if isinstance(e, Alt):
        out = set()
        for b in e.branches:
            out |= brute_language(b, max_len)
        return out
    if isinstance(e, Concat):
        acc = {()}
        for part in e.parts:
            words = brute_language(part, max_len)
            acc = {u + v for u in acc for v in words if len(u) + len(v) <= max_len}
        return acc
    if isinstance(e, Rep):
        base = brute_language(e.inner, max_len)
        power = {()}
        for _ in range(e.count.low):
            power = {u + v for u in power for v in base if len(u) + len(v) <= max_len}
            if not power:
                break
        result = set(power)
        copies = e.count.low
        while power and (e.count.high is None or copies < e.count.high):
            power = {u + v for u in power for v in base if len(u) + len(v) <= max_len}
            copies += 1
            new = power - result
            if not new:
                break
            result |= new
        return result
    raise TypeError(f"not an Expr: {e!r}")


def naive_partition(weights):
    """PARTITION by trying every subset."""
    total = sum(weights)
    if total % 2:
        return False
    half = total // 2
    indexes = range(len(weights))
    return any(
        sum(weights[i] for i in combo) == half
        for size in range(len(weights) + 1)
        for combo in combinations(indexes, size)
    )


def all_words(symbols, max_len):
    """Every word over ``symbols`` with length <= max_len, in enum order."""
    words = [()]
    level = [()]
    for _ in range(max_len):
        level = [w + (s,) for w in level for s in symbols]
        words.extend(level)
    return words


def glushkov_is_deterministic(nfa):
    """Classical one-unambiguity: no state forks on a symbol."""
    seen = {}
    for src, sym, dst in nfa.transitions:
        if seen.setdefault((src, sym), dst) != dst:
            return False
    return True
