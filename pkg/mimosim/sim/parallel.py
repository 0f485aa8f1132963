#-*- coding: utf-8 -*-

from concurrent.futures import ThreadPoolExecutor


def partition(nitems, rank=0, size=1):
    """
    Contiguous block of work for one worker. Every worker gets nitems // size units and
    the last worker also takes the remainder.

    Returns
    -------
    istart: int
    count: int
    """
    nominal_load = nitems // size
    if rank == size - 1:
        count = nitems - rank * nominal_load
    else:
        count = nominal_load
    return rank * nominal_load, count


def dispatch(func, units, threads=1):
    """
    Evaluate func on every work unit and return the results in unit order.

    Parameters
    ----------
    func: callable
        Pure function of one unit.
    units: list
        Work units.
    threads: int, optional
        Worker threads; each takes one contiguous block of units. Default: 1.

    Returns
    -------
    results: list
    """
    units = list(units)
    if threads < 1:
        raise ValueError('threads must be at least 1, got %r' % threads)
    size = min(threads, len(units))
    if size <= 1:
        return [func(unit) for unit in units]

    def run_block(rank):
        istart, count = partition(len(units), rank, size)
        return [func(unit) for unit in units[istart:istart+count]]

    with ThreadPoolExecutor(max_workers=size) as pool:
        blocks = list(pool.map(run_block, range(size)))

    # Blocks are contiguous, so concatenation restores unit order
    return [result for block in blocks for result in block]


# end of file
