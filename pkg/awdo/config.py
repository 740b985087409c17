# -*- coding: utf-8 -*-
"""
設定檔 - 環境變數
只影響日誌輸出，實驗結果一律由 JSON 設定檔決定
"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """應用程式設定"""

    model_config = SettingsConfigDict(env_prefix="AWDO_", env_file=".env", extra="ignore")

    # 應用程式
    APP_NAME: str = "AWDO 神經網路訓練實驗"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # 日誌
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


settings = Settings()
