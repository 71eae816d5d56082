"""Shared state: the executor verification and sweep jobs run on."""

from concurrent.futures import ThreadPoolExecutor

from domination.config import WORKERS

executor = ThreadPoolExecutor(max_workers=max(1, WORKERS))
