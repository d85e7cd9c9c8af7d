"""
性能日志上下文 - 记录流水线各阶段耗时
"""

import time
from typing import Any, Dict, Optional

from jscefr.core.logger import StructuredLogger


class PerformanceLogContext:
    """性能日志上下文管理器"""

    def __init__(
        self,
        operation: str,
        logger: StructuredLogger,
        extra_data: Optional[Dict[str, Any]] = None,
    ):
        self.operation = operation
        self.logger = logger
        self.extra_data = extra_data or {}
        self.start_time: Optional[float] = None
        self.duration_ms: float = 0.0

    def __enter__(self) -> "PerformanceLogContext":
        """进入上下文"""
        self.start_time = time.perf_counter()
        self.logger.debug(f"Starting operation: {self.operation}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        """退出上下文"""
        self.duration_ms = (time.perf_counter() - (self.start_time or 0)) * 1000

        if exc_type:
            self.logger.error(
                f"Operation failed: {self.operation}",
                extra_data={
                    "error": str(exc_val),
                    "duration_ms": self.duration_ms,
                },
            )
        else:
            self.logger.performance(
                f"Operation completed: {self.operation}",
                operation=self.operation,
                duration_ms=self.duration_ms,
                extra_data=self.extra_data or None,
            )
