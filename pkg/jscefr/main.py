"""
jscefr 命令行入口

    jscefr <root> [--mapping FILE] [--out-dir DIR] [--ext .js,.mjs] [--exclude DIR]
                  [--jobs N] [--emit csv,json,summary,histogram] [-v]
    jscefr --dump-default-catalog FILE
    jscefr --coverage [--mapping FILE]

摘要输出到标准输出，诊断和日志输出到标准错误。
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from pydantic import ValidationError

from jscefr.core.config import Settings
from jscefr.core.exceptions import CatalogError, ConfigError, DiscoveryError, JscefrError
from jscefr.core.logger import LoggerManager, get_structured_logger, setup_logging
from jscefr.schemas.catalog import Catalog
from jscefr.schemas.run import EMIT_CHOICES, RunConfig
from jscefr.services.catalog import catalog_coverage, dump_catalog, load_catalog
from jscefr.services.pipeline import analyze_project
from jscefr.services.reporter import build_bundle
from jscefr.toolkit.const import ExitCode, _EXIT_MSG
from jscefr.toolkit.file import create_directory, write_text_file

setup_logging()
logger = get_structured_logger(__name__)

REPORT_FILES = {
    "csv": "report.csv",
    "json": "report.json",
    "histogram": "histogram.csv",
}


def _split_list(values: Optional[Sequence[str]]) -> List[str]:
    """把可重复、逗号分隔的参数展开成列表"""
    items: List[str] = []
    for value in values or []:
        items.extend(part.strip() for part in value.split(",") if part.strip())
    return items


def _checked_catalog(mapping_path: Optional[Path]) -> Catalog:
    """加载目录并做覆盖检查，存在未知节点类型或未注册谓词时报错"""
    catalog = load_catalog(mapping_path)
    coverage = catalog_coverage(catalog)
    if not coverage.is_clean:
        problems = []
        if coverage.unknown_node_kinds:
            problems.append(f"unknown node kinds in rules {', '.join(coverage.unknown_node_kinds)}")
        if coverage.unregistered_predicates:
            problems.append(
                f"unregistered predicates in rules {', '.join(coverage.unregistered_predicates)}"
            )
        raise CatalogError("; ".join(problems), path=catalog.source)
    return catalog


def run(config: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """执行一次完整分析

    Args:
        config: 运行配置
        stdout: 摘要输出流，默认 sys.stdout

    Returns:
        int: 退出码，0 成功（即使有文件被跳过），1 目录或配置错误，2 路径不可用
    """
    stdout = stdout or sys.stdout
    try:
        catalog = _checked_catalog(config.mapping_path)
        result = analyze_project(config, catalog, logger)
        bundle = build_bundle(result.report, result.occurrences)

        texts = {
            "csv": bundle.csv_text,
            "json": bundle.json_text,
            "histogram": bundle.histogram_csv,
        }
        selected = [name for name in REPORT_FILES if name in config.emit]
        if selected:
            try:
                create_directory(str(config.out_dir))
                for name in selected:
                    write_text_file(Path(config.out_dir) / REPORT_FILES[name], texts[name])
            except OSError as e:
                raise DiscoveryError(f"cannot write reports to {config.out_dir}: {e.strerror}")

        if "summary" in config.emit:
            stdout.write(bundle.summary_text)
    except JscefrError as e:
        logger.error(f"{_EXIT_MSG[e.exit_code]}: {e.message}")
        return int(e.exit_code)

    return int(ExitCode.SUCCESS)


def dump_default_catalog(out: Path) -> int:
    """把内置目录写成映射文件格式

    Returns:
        int: 退出码，路径不可写时为 2
    """
    text = dump_catalog(load_catalog(None))
    try:
        write_text_file(Path(out), text)
    except OSError as e:
        logger.error(f"{_EXIT_MSG[ExitCode.PATH_ERROR]}: {out} ({e.strerror})")
        return int(ExitCode.PATH_ERROR)
    logger.info(f"✓ 默认目录已写入: {out}")
    return int(ExitCode.SUCCESS)


def report_coverage(mapping_path: Optional[Path], stdout: Optional[TextIO] = None) -> int:
    """输出目录覆盖诊断

    Returns:
        int: 0 表示没有未知节点类型和未注册谓词，否则为 1
    """
    stdout = stdout or sys.stdout
    try:
        catalog = load_catalog(mapping_path)
    except JscefrError as e:
        logger.error(e.message)
        return int(e.exit_code)

    coverage = catalog_coverage(catalog)
    stdout.write(f"catalog: {catalog.source} ({len(catalog)} rules)\n")
    stdout.write(f"unknown node kinds: {', '.join(coverage.unknown_node_kinds) or '-'}\n")
    stdout.write(
        f"unregistered predicates: {', '.join(coverage.unregistered_predicates) or '-'}\n"
    )
    stdout.write(f"unmatched node kinds: {', '.join(coverage.unmatched_node_kinds) or '-'}\n")
    return int(ExitCode.SUCCESS if coverage.is_clean else ExitCode.CONFIG_ERROR)


def build_parser(prog: str = "jscefr") -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=prog,
        description="Assess the JavaScript proficiency level (A1..C2) shown by a source tree.",
    )
    parser.add_argument("root", nargs="?", type=Path, help="project root directory")
    parser.add_argument(
        "--mapping", type=Path, help="mapping file (CSV); defaults to $JSCEFR_MAPPING or built-in"
    )
    parser.add_argument("--out-dir", type=Path, help="directory for report files")
    parser.add_argument(
        "--ext", action="append", metavar="EXT", help="file extensions to analyze (repeatable)"
    )
    parser.add_argument(
        "--exclude", action="append", metavar="DIR", help="directory names to skip (repeatable)"
    )
    parser.add_argument("--jobs", type=int, help="parallel parse workers")
    parser.add_argument(
        "--emit",
        action="append",
        metavar="FORMAT",
        help=f"outputs to produce, any of {','.join(EMIT_CHOICES)}",
    )
    parser.add_argument(
        "--dump-default-catalog", type=Path, metavar="FILE", help="write the built-in catalog"
    )
    parser.add_argument(
        "--coverage", action="store_true", help="print catalog coverage diagnostics and exit"
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    return parser


def build_run_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """命令行参数优先，其次是 JSCEFR_ 环境变量，最后是默认值

    Raises:
        ConfigError: 参数校验失败（jobs < 1、未知输出格式等）
    """
    options = {
        "root": args.root,
        "mapping_path": args.mapping or (Path(settings.MAPPING) if settings.MAPPING else None),
        "out_dir": args.out_dir or Path(settings.OUT_DIR),
    }
    if args.ext:
        options["extensions"] = set(_split_list(args.ext))
    if args.exclude:
        options["excludes"] = set(_split_list(args.exclude))
    jobs = args.jobs if args.jobs is not None else settings.JOBS
    if jobs is not None:
        options["jobs"] = jobs
    if args.emit:
        options["emit"] = set(_split_list(args.emit))

    try:
        return RunConfig(**options)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise ConfigError(f"{field}: {error['msg']}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings = Settings()
    parser = build_parser(settings.PROJECT_NAME)
    args = parser.parse_args(argv)

    if args.verbose:
        LoggerManager.set_level("DEBUG" if args.verbose > 1 else "INFO")

    if args.dump_default_catalog is not None:
        return dump_default_catalog(args.dump_default_catalog)
    if args.coverage:
        mapping = args.mapping or (Path(settings.MAPPING) if settings.MAPPING else None)
        return report_coverage(mapping)
    if args.root is None:
        parser.error("the project root is required")

    try:
        config = build_run_config(args, settings)
    except ConfigError as e:
        logger.error(f"{_EXIT_MSG[e.exit_code]}: {e.message}")
        return int(e.exit_code)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
