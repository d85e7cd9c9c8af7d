"""工具函数包

本模块提供了项目中常用的工具函数，包括：
- 常量定义（const）
- 数据转换（converter）
- 文件操作（file）
"""

from jscefr.toolkit.const import ExitCode, _EXIT_MSG
from jscefr.toolkit.converter import dict_to_json_str, snake_to_pascal
from jscefr.toolkit.file import (
    create_directory,
    get_file_extension,
    is_directory_exists,
    read_text_file,
    write_text_file,
)

__all__ = [
    # const
    "ExitCode",
    "_EXIT_MSG",

    # converter
    "dict_to_json_str",
    "snake_to_pascal",

    # file
    "create_directory",
    "get_file_extension",
    "is_directory_exists",
    "read_text_file",
    "write_text_file",
]
