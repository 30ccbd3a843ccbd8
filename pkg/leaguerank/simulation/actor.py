import logging

import pykka

from leaguerank.internal import timer

logger = logging.getLogger(__name__)


class ShardWorker(pykka.ThreadingActor):

    """Runs blocks of simulation iterations on its own thread.

    A shard task is any callable taking ``(start, stop)`` and returning the
    per-group rank histograms of iterations ``[start, stop)``.
    """

    def __init__(self, name):
        super().__init__()
        self.name = name

    def on_start(self):
        logger.debug("Simulation worker %s started", self.name)

    def run_shard(self, task, start, stop):
        with timer.time_logger(f"{self.name} iterations {start}-{stop}"):
            return task(start, stop)


def run_sharded(task, shards, workers):
    """Run ``task`` over every ``(start, stop)`` shard, spread on actors.

    Returns the shard results in shard order.
    """
    refs = [ShardWorker.start(f"worker-{i}") for i in range(workers)]
    try:
        proxies = [ref.proxy() for ref in refs]
        futures = [
            proxies[i % workers].run_shard(task, start, stop)
            for i, (start, stop) in enumerate(shards)
        ]
        return pykka.get_all(futures)
    finally:
        for ref in refs:
            ref.stop()
