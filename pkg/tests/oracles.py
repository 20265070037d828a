"""Slow, independent reference computations used to cross-check the package."""


def naive_embed(word, D, p=None):
    """Independent oracle: dict-of-monomials product of (1 + w_i) and its inverse series."""
    series = {(): 1}
    for l in word.letters:
        i = abs(l)
        if l > 0:
            factor = {(): 1, (i,): 1}
        else:
            factor = {(i,) * d: (-1) ** d for d in range(D + 1)}
        out = {}
        for m1, c1 in series.items():
            for m2, c2 in factor.items():
                m = m1 + m2
                if len(m) <= D:
                    out[m] = out.get(m, 0) + c1 * c2
        series = {m: c for m, c in out.items() if (c % p if p else c)}
    if p:
        series = {m: c % p for m, c in series.items()}
    return series


def naive_valuation(word, D, p=None):
    """Smallest degree of a nonzero non-constant coefficient, or D + 1 if none up to D."""
    terms = naive_embed(word, D, p)
    degrees = [len(m) for m, c in terms.items() if m and c]
    return min(degrees, default=D + 1)
