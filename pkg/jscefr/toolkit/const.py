# jscefr/toolkit/const.py

from enum import IntEnum


class ExitCode(IntEnum):
    """命令行退出码"""

    SUCCESS = 0
    CONFIG_ERROR = 1
    PATH_ERROR = 2


# 映射默认消息
_EXIT_MSG = {
    ExitCode.SUCCESS: "分析完成",
    ExitCode.CONFIG_ERROR: "映射文件或配置无效",
    ExitCode.PATH_ERROR: "路径不可用",
}
