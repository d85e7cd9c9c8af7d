"""
领域异常

每个异常都携带一个命令行退出码，由 main.run 统一转换。
"""

from typing import Optional

from jscefr.toolkit.const import ExitCode, _EXIT_MSG


class JscefrError(Exception):
    """所有 jscefr 异常的基类"""

    exit_code: ExitCode = ExitCode.CONFIG_ERROR

    def __init__(self, message: Optional[str] = None):
        self.message = message or _EXIT_MSG[self.exit_code]
        super().__init__(self.message)


class InvalidLevelError(JscefrError, ValueError):
    """无法识别的熟练度等级字符串"""

    def __init__(self, text: str):
        self.text = text
        super().__init__(f"invalid level: {text!r}")


class CatalogError(JscefrError):
    """映射文件加载或校验失败"""

    def __init__(
        self, message: str, row: Optional[int] = None, path: Optional[str] = None
    ):
        self.row = row
        self.path = path
        location = path or "<catalog>"
        if row is not None:
            location = f"{location}: row {row}"
        super().__init__(f"{location}: {message}")


class ConfigError(JscefrError):
    """运行配置无效"""


class DiscoveryError(JscefrError):
    """项目根目录或输出路径不可用"""

    exit_code = ExitCode.PATH_ERROR


class IntegrityError(JscefrError):
    """聚合阶段的数据完整性错误"""


class ParseError(JscefrError):
    """单个文件的语法错误，只会导致该文件被跳过"""

    def __init__(self, path: str, line: int, col: int, message: str):
        self.path = path
        self.line = line
        self.col = col
        self.detail = message
        super().__init__(f"{path}:{line}:{col}: {message}")
