from typing import Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """应用配置类

    所有字段都可以通过 ``JSCEFR_`` 前缀的环境变量或 ``.env`` 文件覆盖，
    例如 ``JSCEFR_MAPPING=./my-mapping.csv``。
    """

    # 应用基本信息
    PROJECT_NAME: str = "jscefr"

    # 应用环境（production 下日志输出为 JSON）
    APP_ENV: str = "development"

    # 日志配置
    LOG_LEVEL: str = "WARNING"
    LOG_DIR: Optional[str] = None

    # 分析配置
    MAPPING: Optional[str] = None  # --mapping 的后备值
    OUT_DIR: str = "./jscefr-out"
    JOBS: Optional[int] = None

    class Config:
        env_prefix = "JSCEFR_"
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"


# 创建全局配置实例
settings = Settings()
