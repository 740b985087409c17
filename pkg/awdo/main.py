# -*- coding: utf-8 -*-
"""
AWDO 實驗 - 命令列入口

    bench <objective> <optimizer> [--config FILE]
    train-gd --config FILE
    train-awdo --config FILE
    render-weights --params FILE --out FILE [--config FILE]
    render-samples --config FILE --out FILE [--count N]
    compare --gd FILE --awdo FILE [--threshold ACC]

結束碼：0 成功、2 使用方式 / 設定 / 資料錯誤、3 數值失敗
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from .commands import bench, reports, train
from .config import settings
from .exceptions import AwdoError

logger = logging.getLogger("awdo")


EXIT_OK = 0
EXIT_USAGE = 2


def setup_logging() -> None:
    """依設定初始化日誌"""
    level = logging.DEBUG if settings.DEBUG else getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO)
    logging.basicConfig(level=level, format=settings.LOG_FORMAT, stream=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="awdo",
        description=f"{settings.APP_NAME} {settings.APP_VERSION}",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # 註冊指令
    bench.register(subparsers)
    train.register(subparsers)
    reports.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 錯誤一律回傳 2
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    setup_logging()
    try:
        return args.handler(args)
    except AwdoError as e:
        print(f"❌ {e.detail}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"❌ 設定錯誤：{e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
