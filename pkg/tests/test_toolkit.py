import logging

from jscefr.core.exceptions import CatalogError, DiscoveryError, ParseError
from jscefr.core.logger import get_structured_logger
from jscefr.core.profiling import PerformanceLogContext
from jscefr.toolkit import (
    ExitCode,
    _EXIT_MSG,
    create_directory,
    dict_to_json_str,
    get_file_extension,
    is_directory_exists,
    read_text_file,
    snake_to_pascal,
    write_text_file,
)


def test_const():
    """测试退出码与默认消息"""
    assert [int(code) for code in ExitCode] == [0, 1, 2]
    assert set(_EXIT_MSG) == set(ExitCode)


def test_converter():
    """测试 JSON 转换与命名转换"""
    assert dict_to_json_str({"b": 1, "a": "é"}) == '{\n  "b": 1,\n  "a": "é"\n}\n'
    assert snake_to_pascal("for_in_statement") == "ForInStatement"


def test_file(tmp_path):
    """测试文件读写与路径工具"""
    directory = tmp_path / "a" / "b"
    create_directory(str(directory))
    assert is_directory_exists(str(directory))
    path = directory / "x.JS"
    write_text_file(path, "line1\nline2\n")
    assert path.read_bytes() == b"line1\nline2\n"
    assert read_text_file(path) == "line1\nline2\n"
    assert get_file_extension(str(path)) == ".js"


def test_exceptions_carry_exit_codes():
    """测试异常的退出码与消息"""
    error = CatalogError("duplicate id: 'a'", row=3, path="m.csv")
    assert error.message == "m.csv: row 3: duplicate id: 'a'"
    assert error.exit_code == ExitCode.CONFIG_ERROR
    assert DiscoveryError("x").exit_code == ExitCode.PATH_ERROR
    parse_error = ParseError("a.js", 2, 4, "syntax error")
    assert str(parse_error) == "a.js:2:4: syntax error"
    assert parse_error.detail == "syntax error"


def test_performance_context(caplog):
    """测试阶段耗时写入性能日志"""
    logger = get_structured_logger("jscefr.test", run_id="run-1")
    with caplog.at_level(logging.INFO, logger="performance"):
        with PerformanceLogContext("discover", logger, {"files": 3}) as ctx:
            pass
    assert ctx.duration_ms >= 0
    records = [r for r in caplog.records if r.name == "performance"]
    assert records[-1].operation == "discover"
    assert records[-1].run_id == "run-1"
    assert records[-1].extra_data == {"files": 3}
