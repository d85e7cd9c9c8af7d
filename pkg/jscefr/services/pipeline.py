"""
分析流水线：发现 -> 解析 -> 检测 -> 聚合

解析和检测按文件并行（进程池），结果按发现顺序归并，
因此 jobs=1 与 jobs=N 的输出完全相同。
"""

from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from jscefr.core.exceptions import ParseError
from jscefr.core.logger import StructuredLogger, get_structured_logger
from jscefr.core.profiling import PerformanceLogContext
from jscefr.schemas.catalog import Catalog
from jscefr.schemas.report import AnalysisResult, FileOutcome, Occurrence
from jscefr.schemas.run import RunConfig
from jscefr.services.aggregator import file_report, project_report
from jscefr.services.detector import CompiledCatalog, detect
from jscefr.services.discovery import discover_js_files, load_source_file, repo_name
from jscefr.services.parser import parse_source

# 工作进程内的状态，由 _init_worker 设置
_WORKER_ROOT: Optional[Path] = None
_WORKER_REPO: str = ""
_WORKER_CATALOG: Optional[CompiledCatalog] = None


def _init_worker(root: Path, repo: str, catalog: Catalog) -> None:
    global _WORKER_ROOT, _WORKER_REPO, _WORKER_CATALOG
    _WORKER_ROOT = root
    _WORKER_REPO = repo
    _WORKER_CATALOG = CompiledCatalog(catalog)


def analyze_file(rel_path: str) -> FileOutcome:
    """在当前工作进程中分析一个文件

    解析失败、不是 UTF-8 或不可读的文件返回带 error 的结果，不抛异常。
    """
    display_path = f"{_WORKER_REPO}/{rel_path}"
    try:
        source = load_source_file(_WORKER_ROOT, rel_path, _WORKER_REPO)
        unit = parse_source(source)
    except ParseError as e:
        return FileOutcome(
            path=rel_path, display_path=display_path, error=e.detail, line=e.line, col=e.col
        )
    except UnicodeDecodeError:
        return FileOutcome(path=rel_path, display_path=display_path, error="not valid UTF-8")
    except OSError as e:
        return FileOutcome(
            path=rel_path, display_path=display_path, error=f"unreadable ({e.strerror})"
        )
    occurrences = detect(unit, _WORKER_CATALOG.catalog, _WORKER_CATALOG)
    return FileOutcome(path=rel_path, display_path=display_path, occurrences=occurrences)


def _analyze_all(paths: List[str], root: Path, repo: str, catalog: Catalog, jobs: int):
    if jobs <= 1 or len(paths) <= 1:
        _init_worker(root, repo, catalog)
        return [analyze_file(path) for path in paths]

    chunksize = max(1, len(paths) // (jobs * 4))
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_init_worker, initargs=(root, repo, catalog)
    ) as executor:
        # map 保持输入顺序
        return list(executor.map(analyze_file, paths, chunksize=chunksize))


def analyze_project(
    config: RunConfig, catalog: Catalog, logger: Optional[StructuredLogger] = None
) -> AnalysisResult:
    """对一个项目执行完整分析

    Args:
        config: 运行配置
        catalog: 已通过覆盖检查的目录
        logger: 结构化日志，默认新建一个（新的 run_id）

    Returns:
        AnalysisResult: 按发现顺序排列的出现、项目报告和被跳过的文件

    Raises:
        DiscoveryError: 根目录不可用
    """
    logger = logger or get_structured_logger(__name__)
    root = Path(config.root)
    repo = repo_name(root)

    with PerformanceLogContext("discover", logger) as ctx:
        paths = discover_js_files(root, config.discovery)
        ctx.extra_data["files"] = len(paths)

    with PerformanceLogContext("parse+detect", logger, {"jobs": config.jobs}):
        outcomes = _analyze_all(paths, root, repo, catalog, config.jobs)

    occurrences: List[Occurrence] = []
    reports = []
    skipped: List[FileOutcome] = []
    with PerformanceLogContext("aggregate", logger):
        for outcome in outcomes:
            if outcome.skipped:
                skipped.append(outcome)
                location = (
                    f"{outcome.path}:{outcome.line}:{outcome.col}"
                    if outcome.line is not None
                    else outcome.path
                )
                logger.diagnostic(f"跳过文件 {location}: {outcome.error}", path=outcome.path)
                continue
            occurrences.extend(outcome.occurrences)
            reports.append(file_report(outcome.display_path, outcome.occurrences))
        report = project_report(reports, skipped=len(skipped), repo=repo)

    logger.info(
        f"分析完成: {report.analyzed_files} 个文件, 跳过 {report.skipped_files} 个, "
        f"{len(occurrences)} 个构造"
    )
    return AnalysisResult(occurrences=occurrences, report=report, skipped=skipped)
