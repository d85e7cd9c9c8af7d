from jscefr.services.aggregator import file_report, project_report
from jscefr.services.catalog import (
    catalog_coverage,
    default_catalog,
    dump_catalog,
    load_catalog,
    parse_catalog,
)
from jscefr.services.detector import CompiledCatalog, detect
from jscefr.services.discovery import discover_js_files, load_source_file, repo_name
from jscefr.services.parser import NODE_KINDS, parse_source
from jscefr.services.pipeline import analyze_project
from jscefr.services.predicates import PREDICATE_REGISTRY, registered_predicates
from jscefr.services.reporter import (
    build_bundle,
    emit_csv,
    emit_json,
    emit_level_histogram,
    emit_summary,
)

__all__ = [
    "file_report",
    "project_report",
    "catalog_coverage",
    "default_catalog",
    "dump_catalog",
    "load_catalog",
    "parse_catalog",
    "CompiledCatalog",
    "detect",
    "discover_js_files",
    "load_source_file",
    "repo_name",
    "NODE_KINDS",
    "parse_source",
    "analyze_project",
    "PREDICATE_REGISTRY",
    "registered_predicates",
    "build_bundle",
    "emit_csv",
    "emit_json",
    "emit_level_histogram",
    "emit_summary",
]
