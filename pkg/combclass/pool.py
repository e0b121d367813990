import logging
import multiprocessing

logger = logging.getLogger(__name__)

DEFAULT_CHUNKSIZE = 64


def map_tasks(func, items, jobs=1, ordered=True, chunksize=DEFAULT_CHUNKSIZE):
    """
    Apply `func` to every item, in-process for jobs <= 1 and on a
    :py:class:`multiprocessing.Pool` otherwise.

    :param func: a picklable, module level callable
    :param bool ordered: keep the input order (imap) instead of yielding
        results as they complete (imap_unordered)
    """
    if jobs is None or jobs <= 1:
        for item in items:
            yield func(item)
        return
    logger.debug('Starting a pool of %d workers (ordered=%s, chunksize=%d)', jobs, ordered, chunksize)
    with multiprocessing.Pool(processes=jobs) as pool:
        mapper = pool.imap if ordered else pool.imap_unordered
        for result in mapper(func, items, chunksize):
            yield result
