from hypothesis import strategies as st

from johnsonlab.freegroup import reduce


def letters(n=4, max_len=10):
    return st.lists(st.integers(1, n).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len)


def words(n=4, max_len=10):
    return letters(n, max_len).map(reduce)
