"""
Fixlab - Settings
Environment-backed configuration; CLI flags override these values
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240601
REPORT_FORMATS = ('csv', 'jsonl')


@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    log_file: Optional[str] = None
    report_dir: str = "reports"
    constants_file: Optional[str] = None
    seed: int = DEFAULT_SEED
    workers: int = 4
    report_format: str = "csv"

    @classmethod
    def from_env(cls) -> 'Settings':
        load_dotenv()
        report_format = os.getenv('FIXLAB_FORMAT', 'csv').lower()
        if report_format not in REPORT_FORMATS:
            logger.warning(f"Unknown FIXLAB_FORMAT {report_format!r}, using csv")
            report_format = 'csv'
        return cls(
            log_level=os.getenv('FIXLAB_LOG_LEVEL', 'INFO').upper(),
            log_file=os.getenv('FIXLAB_LOG_FILE') or None,
            report_dir=os.getenv('FIXLAB_REPORT_DIR', 'reports'),
            constants_file=os.getenv('FIXLAB_CONSTANTS_FILE') or None,
            seed=int(os.getenv('FIXLAB_SEED', DEFAULT_SEED)),
            workers=max(1, int(os.getenv('FIXLAB_WORKERS', 4))),
            report_format=report_format,
        )

    def override(self, **changes) -> 'Settings':
        """Copy with every non-None change applied"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
