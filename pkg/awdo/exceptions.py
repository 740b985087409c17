# -*- coding: utf-8 -*-
"""
錯誤定義 - 每個例外帶有 CLI 結束碼

0 成功、2 使用方式 / 設定 / 資料錯誤、3 數值失敗
"""

from typing import Optional


class AwdoError(Exception):
    """所有錯誤的基底"""
    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class ConfigError(AwdoError):
    """設定不合法"""
    exit_code = 2


class DataError(AwdoError):
    """資料檔缺少或格式錯誤"""
    exit_code = 2


class ShapeError(AwdoError):
    """矩陣 / 向量形狀不一致"""
    exit_code = 2


class MatrixError(AwdoError):
    """矩陣性質不符（例如不對稱）"""
    exit_code = 2


class IdxFormatError(DataError):
    """IDX 檔格式錯誤，記錄位元組位置與預期內容"""

    def __init__(self, detail: str, offset: int, expected: str):
        super().__init__(f"{detail}（位置 {offset}，預期 {expected}）")
        self.offset = offset
        self.expected = expected


class IdxMagicError(IdxFormatError):
    """magic number 不符"""


class IdxTruncatedError(IdxFormatError):
    """資料長度不足"""


class IdxDimensionError(IdxFormatError):
    """維度與資料長度不符"""


class NumericalError(AwdoError):
    """數值失敗（NaN / 無限大）"""
    exit_code = 3


class PressureError(NumericalError):
    """某個空氣團的壓力值無法計算或不是有限值"""

    def __init__(self, detail: str, parcel_index: Optional[int] = None):
        if parcel_index is not None:
            detail = f"空氣團 {parcel_index}：{detail}"
        super().__init__(detail)
        self.parcel_index = parcel_index
