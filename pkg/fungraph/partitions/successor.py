"""
Integer partitions as ascending sequences.

Lexicographic order on ascending sequences is the generation order of
the ascending-composition successor rule: raise the second-to-last part
by one and spread the rest of the last two parts as copies of the new
value, the final part absorbing the remainder.
"""

Partition = tuple[int, ...]


def first_partition(n: int) -> Partition:
    """The lexicographically first partition of n: n ones."""
    return (1,) * n


def next_partition_same_n(p: Partition) -> Partition | None:
    """
    Next partition of the same integer in lexicographic order.

    Returns:
        The successor, or None if p is empty or the single part (n)
    """
    if len(p) < 2:
        return None
    prefix = p[:-2]
    total = p[-2] + p[-1]
    x = p[-2] + 1
    rest = total - x
    if rest < x:
        return prefix + (total,)
    parts = [x]
    while rest >= 2 * x:
        parts.append(x)
        rest -= x
    parts.append(rest)
    return prefix + tuple(parts)


def successor_partition(p: Partition) -> Partition:
    """Next partition of the same integer, or the first partition of n+1."""
    following = next_partition_same_n(p)
    if following is not None:
        return following
    return first_partition(sum(p) + 1)
