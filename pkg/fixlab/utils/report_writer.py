"""
Report Writer Utility - Queues report records and flushes them to disk in batches
"""

import asyncio
import logging
import os
from collections import defaultdict
from typing import Dict, List

import aiofiles

from fixlab.models.reports import BoundReport
from fixlab.utils.report_factory import ReportFactory

logger = logging.getLogger(__name__)


class ReportWriter:
    """
    Batches BoundReports per output file and appends them with aiofiles
    - each file is truncated and given its header on first write
    - callers queue reports already in final order
    """

    def __init__(self, report_dir: str, report_format: str = 'csv', batch_size: int = 50):
        self.report_dir = report_dir
        self.report_format = report_format
        self.batch_size = batch_size
        self.queues: Dict[str, List[BoundReport]] = defaultdict(list)
        self.started: set = set()
        self.written: Dict[str, int] = defaultdict(int)
        self._locks: Dict[str, asyncio.Lock] = defaultdict(asyncio.Lock)

    def path_for(self, name: str) -> str:
        return os.path.join(self.report_dir, f"{name}.{self.report_format}")

    async def queue_report(self, name: str, report: BoundReport) -> None:
        self.queues[name].append(report)
        if len(self.queues[name]) >= self.batch_size:
            await self._flush(name)

    async def queue_reports(self, name: str, reports: List[BoundReport]) -> None:
        for report in reports:
            await self.queue_report(name, report)

    async def _flush(self, name: str) -> None:
        async with self._locks[name]:
            batch, self.queues[name] = self.queues[name], []
            first = name not in self.started
            if not batch and not first:
                return
            path = self.path_for(name)
            os.makedirs(self.report_dir, exist_ok=True)
            text = ReportFactory.render(batch, self.report_format, header=first)
            async with aiofiles.open(path, 'w' if first else 'a', encoding='utf-8', newline='') as handle:
                await handle.write(text)
            self.started.add(name)
            self.written[name] += len(batch)
            logger.debug(f"Wrote {len(batch)} records to {path}")

    async def flush_all_queues(self) -> None:
        """Write every pending batch; also creates files that received no records"""
        names = list(self.queues.keys())
        if names:
            await asyncio.gather(*(self._flush(name) for name in names))

    async def write_text(self, filename: str, text: str) -> str:
        os.makedirs(self.report_dir, exist_ok=True)
        path = os.path.join(self.report_dir, filename)
        async with aiofiles.open(path, 'w', encoding='utf-8', newline='') as handle:
            await handle.write(text)
        return path
